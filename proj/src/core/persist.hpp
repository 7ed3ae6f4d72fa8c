#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "core/engine.hpp"

namespace wpb {

// One RunResult as a single-line JSON object (no trailing newline).
std::string to_json_line(const RunResult& r);
RunResult from_json_line(std::string_view line);

inline constexpr std::string_view kTraceCsvHeader = "run_id,evaluation,best_fitness";
void write_trace_csv(std::ostream& out, const RunResult& r);

}  // namespace wpb
