#include <sstream>
#include <stdexcept>

#include "vira_cli/cli.hpp"

namespace vira::cli {

using nlohmann::json;

json to_json(const VerificationReport& report) {
  json j = json::object();
  j["record"] = "report";
  j["check"] = report.check_name;
  j["parameters"] = json::object();
  for (const auto& [k, v] : report.parameters) j["parameters"][k] = v;
  j["status"] = to_string(report.status);
  j["checked_count"] = report.checked_count;
  j["message"] = report.message;
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    j["counterexample"] = {
        {"indices", ce.indices}, {"input", ce.input}, {"expected", ce.expected}, {"actual", ce.actual}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

namespace {

void walk(const json& node, const std::string& path, std::map<std::string, std::string>& out) {
  if (node.is_object() && !node.empty()) {
    for (const auto& [key, value] : node.items()) walk(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array() && !node.empty()) {
    for (std::size_t i = 0; i < node.size(); ++i) walk(node[i], path + "[" + std::to_string(i) + "]", out);
  } else if (node.is_string()) {
    out[path] = node.get<std::string>();
  } else {
    out[path] = node.dump();
  }
}

// Leaves in document order, which for sorted-key objects is also path order
// except for arrays with ten or more elements.
void walk_ordered(const json& node, const std::string& path, std::ostream& os) {
  if (node.is_object() && !node.empty()) {
    for (const auto& [key, value] : node.items()) walk_ordered(value, path.empty() ? key : path + "." + key, os);
  } else if (node.is_array() && !node.empty()) {
    for (std::size_t i = 0; i < node.size(); ++i) walk_ordered(node[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

}  // namespace

std::map<std::string, std::string> flatten(const json& record) {
  std::map<std::string, std::string> out;
  walk(record, "", out);
  return out;
}

std::string to_text(const json& record) {
  std::ostringstream os;
  walk_ordered(record, "", os);
  return os.str();
}

std::map<std::string, std::string> parse_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto sep = line.find(": ");
    if (sep == std::string::npos) throw std::invalid_argument("malformed text record line '" + line + "'");
    out[line.substr(0, sep)] = line.substr(sep + 2);
  }
  return out;
}

}  // namespace vira::cli
