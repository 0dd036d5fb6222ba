#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "byzgather/analysis.hpp"
#include "byzgather/error.hpp"
#include "byzgather/io.hpp"
#include "byzgather/svg.hpp"

namespace py = pybind11;
using namespace byzgather;

namespace {

std::vector<Point2> to_points(const std::vector<std::pair<double, double>>& xy) {
  std::vector<Point2> pts;
  for (auto [x, y] : xy) pts.push_back({x, y});
  return pts;
}

py::tuple as_tuple(Point2 p) { return py::make_tuple(p.x, p.y); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gathering planners and adversarial evaluation for robots with byzantine faults";

  static py::exception<Error> error(m, "ByzGatherError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const std::vector<std::pair<double, double>>& robots, int F) {
             return Instance(to_points(robots), F);
           }),
           py::arg("robots"), py::arg("F"))
      .def_property_readonly("robots",
                             [](const Instance& i) {
                               py::list out;
                               for (Point2 p : i.robots()) out.append(as_tuple(p));
                               return out;
                             })
      .def_property_readonly("F", &Instance::budget)
      .def("__len__", &Instance::size)
      .def("to_json", &dump_instance)
      .def_static("from_json", &parse_instance);

  py::class_<Schedule>(m, "Schedule")
      .def_readonly("algorithm", &Schedule::algorithm)
      .def_property_readonly("horizon", &Schedule::horizon)
      .def_property_readonly("trajectories",
                             [](const Schedule& s) {
                               py::list out;
                               for (const Trajectory& tr : s.trajectories) {
                                 py::list wps;
                                 for (const Waypoint& w : tr.waypoints) wps.append(py::make_tuple(w.t, w.p.x, w.p.y));
                                 out.append(wps);
                               }
                               return out;
                             })
      .def_property_readonly("meeting_points",
                             [](const Schedule& s) {
                               py::list out;
                               for (Point2 p : s.meta.meeting_points) out.append(as_tuple(p));
                               return out;
                             })
      .def_property_readonly("predicted_cr", [](const Schedule& s) { return s.meta.predicted_cr; })
      .def_property_readonly("d_eps", [](const Schedule& s) { return s.meta.d_eps; })
      .def("position", [](const Schedule& s, std::size_t robot, double t) {
        return as_tuple(s.trajectories.at(robot).position(t));
      })
      .def("to_json", &dump_schedule)
      .def_static("from_json", &parse_schedule);

  m.def(
      "plan",
      [](const Instance& inst, const std::string& alg, std::optional<double> d_eps) {
        return plan_by_name(inst, alg, d_eps);
      },
      py::arg("instance"), py::arg("algorithm") = "auto", py::arg("d_eps") = std::nullopt);
  m.def("auto_algorithm", [](const Instance& inst) { return std::string(auto_algorithm(inst)); });

  m.def("min_enclosing_circle", [](const std::vector<std::pair<double, double>>& pts) {
    const Circle c = min_enclosing_circle(to_points(pts));
    return py::make_tuple(as_tuple(c.center), c.radius);
  });
  m.def("centerpoint", [](const std::vector<std::pair<double, double>>& pts) {
    return as_tuple(centerpoint(to_points(pts)));
  });

  m.def("gather_time", [](const Schedule& s, std::uint64_t mask) { return gather_time(s, SubsetMask(mask)); });
  m.def("optimal_gather_time",
        [](const Instance& inst, std::uint64_t mask) { return optimal_gather_time(inst, SubsetMask(mask)); });
  m.def("reliable_subsets", [](const Instance& inst) {
    std::vector<std::uint64_t> out;
    for (SubsetMask mk : enumerate_reliable_subsets(inst)) out.push_back(mk.bits());
    return out;
  });
  m.def("violations", [](const Instance& inst, const Schedule& s) {
    std::vector<std::string> out;
    for (const Violation& v : validate_schedule(inst, s)) out.push_back(v.detail);
    return out;
  });

  m.def("adversary", [](const Instance& inst, const Schedule& s) {
    const AdversaryReport r = overall_cr(inst, s);
    py::dict d;
    d["algorithm"] = r.algorithm;
    d["overall_cr"] = r.overall_cr;
    d["argmax_mask"] = r.argmax.bits();
    d["bound"] = r.bound;
    d["bound_satisfied"] = r.bound_satisfied;
    py::list rows;
    for (std::size_t k = 0; k < r.subsets.size(); ++k) {
      py::dict row;
      row["mask"] = r.subsets[k].subset.bits();
      row["gather_time"] = r.subsets[k].gather_time;
      row["optimal_time"] = r.subsets[k].optimal_time;
      row["cr"] = r.subsets[k].cr;
      row["bound"] = r.subset_bounds[k];
      rows.append(row);
    }
    d["subsets"] = rows;
    return d;
  });
  m.def("report_json", [](const Instance& inst, const Schedule& s) { return dump_report(overall_cr(inst, s)); });

  m.def("lower_bound_f1", [](const Instance& inst) { return lower_bound_f1(inst).value; });
  m.def(
      "oracle",
      [](const Instance& inst, std::optional<double> resolution) {
        const OracleResult r = oracle_opt_point(inst, resolution);
        return py::make_tuple(as_tuple(r.d), r.cr, r.slack);
      },
      py::arg("instance"), py::arg("resolution") = std::nullopt);
  m.def("tri_opt_point", [](const std::vector<std::pair<double, double>>& pts) {
    const std::vector<Point2> p = to_points(pts);
    if (p.size() != 3) throw Error(ErrorCode::BadParams, "need exactly three points");
    const TriangleOptimum t = tri_opt_point(TriangleInstance::from_points(p[0], p[1], p[2]));
    return py::make_tuple(as_tuple(t.d), t.predicted_cr);
  });
  m.def("render_svg", &render_svg);
}
