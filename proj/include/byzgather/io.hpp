#pragma once

#include <string>

#include "byzgather/analysis.hpp"
#include "byzgather/model.hpp"

namespace byzgather {

// JSON text formats. Doubles are written in shortest round-trip form, so
// parse(dump(x)) reproduces x bit for bit. Malformed input throws Error(Parse);
// a well-formed instance that breaks the model's preconditions throws
// Error(InvalidInstance).

std::string dump_instance(const Instance& instance);
Instance parse_instance(const std::string& text);

std::string dump_schedule(const Schedule& schedule);
Schedule parse_schedule(const std::string& text);

std::string dump_report(const AdversaryReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace byzgather
