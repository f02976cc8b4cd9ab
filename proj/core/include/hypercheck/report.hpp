#pragma once

#include <optional>
#include <string>

#include "hypercheck/suite.hpp"

namespace hypercheck {

// JSON: one suite object {suite, tolerance, config, cases, summary, wall_ms},
// or {suites: [...], summary, wall_ms} for combined runs.
// CSV: one row per case with parameters flattened into columns.
// Markdown: one table per suite.
std::string format_report(const RunResult& result, OutputFormat format);

// Writes to path, or to standard output when path is empty.
// Throws std::runtime_error if the file cannot be written.
void write_report(const RunResult& result, OutputFormat format, const std::optional<std::string>& path);

}  // namespace hypercheck
