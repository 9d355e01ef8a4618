#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "vira/report.hpp"

namespace vira::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_input_error = 2 };

/// Runs the tool on `args` (without the program name). Records go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Report as a JSON object with sorted keys.
nlohmann::json to_json(const VerificationReport& report);

/// One leaf per line, "path: value". Object members are joined with '.',
/// array elements with "[i]"; strings are written raw, other leaves as JSON
/// literals. Empty containers are written as "{}" or "[]".
std::string to_text(const nlohmann::json& record);

/// Parses one text record back into path -> value pairs.
std::map<std::string, std::string> parse_text(const std::string& text);

/// The same path -> value pairs computed from a JSON record.
std::map<std::string, std::string> flatten(const nlohmann::json& record);

}  // namespace vira::cli
