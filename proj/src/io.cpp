#include "byzgather/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "byzgather/error.hpp"

namespace byzgather {

using nlohmann::json;

namespace {

json point_json(Point2 p) { return json::array({p.x, p.y}); }

Point2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::Parse, "expected a point [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

template <class T>
std::optional<T> optional_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw Error(ErrorCode::Parse, std::string("field '") + key + "' must be a number");
  return it->get<T>();
}

}  // namespace

std::string dump_instance(const Instance& instance) {
  json robots = json::array();
  for (Point2 p : instance.robots()) robots.push_back(point_json(p));
  return json{{"robots", robots}, {"F", instance.budget()}}.dump() + "\n";
}

Instance parse_instance(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("robots") || !j["robots"].is_array())
    throw Error(ErrorCode::Parse, "instance needs a 'robots' array");
  if (!j.contains("F") || !j["F"].is_number_integer()) throw Error(ErrorCode::Parse, "instance needs an integer 'F'");
  std::vector<Point2> robots;
  for (const json& p : j["robots"]) robots.push_back(point_from(p));
  return Instance(std::move(robots), j["F"].get<int>());
}

std::string dump_schedule(const Schedule& schedule) {
  json trajectories = json::array();
  for (const Trajectory& tr : schedule.trajectories) {
    json wps = json::array();
    for (const Waypoint& w : tr.waypoints) wps.push_back(json::array({w.t, w.p.x, w.p.y}));
    trajectories.push_back(std::move(wps));
  }
  json meta = json::object();
  json meeting = json::array();
  for (Point2 p : schedule.meta.meeting_points) meeting.push_back(point_json(p));
  meta["meeting_points"] = meeting;
  if (schedule.meta.predicted_cr) meta["predicted_cr"] = *schedule.meta.predicted_cr;
  if (schedule.meta.d_eps) meta["d_eps"] = *schedule.meta.d_eps;
  if (schedule.meta.budget_overruns) meta["budget_overruns"] = *schedule.meta.budget_overruns;
  return json{{"algorithm", schedule.algorithm}, {"trajectories", trajectories}, {"meta", meta}}.dump() + "\n";
}

Schedule parse_schedule(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("trajectories") || !j["trajectories"].is_array())
    throw Error(ErrorCode::Parse, "schedule needs a 'trajectories' array");
  Schedule s;
  if (j.contains("algorithm")) {
    if (!j["algorithm"].is_string()) throw Error(ErrorCode::Parse, "'algorithm' must be a string");
    s.algorithm = j["algorithm"].get<std::string>();
  }
  for (const json& tr : j["trajectories"]) {
    if (!tr.is_array() || tr.empty()) throw Error(ErrorCode::Parse, "each trajectory needs at least one waypoint");
    Trajectory out;
    for (const json& w : tr) {
      if (!w.is_array() || w.size() != 3 || !w[0].is_number() || !w[1].is_number() || !w[2].is_number())
        throw Error(ErrorCode::Parse, "expected a waypoint [t, x, y]");
      out.waypoints.push_back({w[0].get<double>(), {w[1].get<double>(), w[2].get<double>()}});
    }
    s.trajectories.push_back(std::move(out));
  }
  if (const auto it = j.find("meta"); it != j.end()) {
    if (!it->is_object()) throw Error(ErrorCode::Parse, "'meta' must be an object");
    if (const auto mp = it->find("meeting_points"); mp != it->end()) {
      if (!mp->is_array()) throw Error(ErrorCode::Parse, "'meeting_points' must be an array");
      for (const json& p : *mp) s.meta.meeting_points.push_back(point_from(p));
    }
    s.meta.predicted_cr = optional_field<double>(*it, "predicted_cr");
    s.meta.d_eps = optional_field<double>(*it, "d_eps");
    s.meta.budget_overruns = optional_field<int>(*it, "budget_overruns");
  }
  return s;
}

std::string dump_report(const AdversaryReport& report) {
  json rows = json::array();
  for (std::size_t k = 0; k < report.subsets.size(); ++k) {
    const GatherReport& r = report.subsets[k];
    json row{{"mask", r.subset.bits()},
             {"gather_time", r.gather_time},
             {"optimal_time", r.optimal_time},
             {"cr", r.cr},
             {"bound", nullptr}};
    if (k < report.subset_bounds.size() && report.subset_bounds[k]) row["bound"] = *report.subset_bounds[k];
    rows.push_back(std::move(row));
  }
  json out{{"algorithm", report.algorithm},
           {"subsets", rows},
           {"overall_cr", report.overall_cr},
           {"argmax_mask", report.argmax.bits()},
           {"bound", nullptr},
           {"bound_satisfied", report.bound_satisfied}};
  if (report.bound) out["bound"] = *report.bound;
  return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << text;
}

}  // namespace byzgather
