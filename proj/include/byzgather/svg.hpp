#pragma once

#include <string>

#include "byzgather/model.hpp"

namespace byzgather {

/// Standalone SVG 1.1 plot of a schedule: start positions, trajectories,
/// meeting points and the MEC of all robots. Output is byte-deterministic.
std::string render_svg(const Instance& instance, const Schedule& schedule);

}  // namespace byzgather
