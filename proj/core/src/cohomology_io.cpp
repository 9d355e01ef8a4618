#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vira/cohomology.hpp"

namespace vira {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> fields;
};

std::vector<std::string> split_tabs(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = text.find('\t', start);
    out.emplace_back(text.substr(start, tab - start));
    if (tab == std::string_view::npos) return out;
    start = tab + 1;
  }
}

// Non-comment, non-blank lines with their 1-based line numbers.
std::vector<Line> records(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw.front() == '#') continue;
    out.push_back({number, split_tabs(raw)});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

Index parse_index(const std::string& text, std::size_t line) {
  Index value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) fail(line, "invalid integer '" + text + "'");
  return value;
}

Scalar parse_value(const std::string& text, std::size_t line) {
  try {
    return Scalar::parse(text);
  } catch (const ScalarParseError& e) {
    fail(line, e.what());
  }
}

Index parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw InputError("missing header line 'window<TAB>W'");
  const Line& head = lines.front();
  if (head.fields.size() != 2 || head.fields[0] != "window") {
    fail(head.number, "expected header 'window<TAB>W'");
  }
  const Index w = parse_index(head.fields[1], head.number);
  if (w < 0) fail(head.number, "window must be non-negative");
  return w;
}

}  // namespace

TwoCocycleTable read_cocycle_table(std::istream& in) {
  const auto lines = records(in);
  TwoCocycleTable table(parse_header(lines));
  std::set<std::pair<Index, Index>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.fields.size() != 3) fail(line.number, "expected 'm<TAB>n<TAB>value'");
    const Index m = parse_index(line.fields[0], line.number);
    const Index n = parse_index(line.fields[1], line.number);
    Scalar value = parse_value(line.fields[2], line.number);
    if (m >= n) fail(line.number, "entries require m < n");
    if (!seen.insert({m, n}).second) {
      fail(line.number, "duplicate entry (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
    try {
      table.set(m, n, std::move(value));
    } catch (const std::out_of_range& e) {
      fail(line.number, e.what());
    }
  }
  return table;
}

void write_cocycle_table(std::ostream& out, const TwoCocycleTable& table) {
  out << "window\t" << table.window() << '\n';
  for (const auto& [key, value] : table.entries()) {
    out << key.first << '\t' << key.second << '\t' << value.str() << '\n';
  }
}

OneCochain read_one_cochain(std::istream& in) {
  const auto lines = records(in);
  OneCochain beta(parse_header(lines));
  std::set<Index> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.fields.size() != 2) fail(line.number, "expected 'n<TAB>value'");
    const Index n = parse_index(line.fields[0], line.number);
    Scalar value = parse_value(line.fields[1], line.number);
    if (!seen.insert(n).second) fail(line.number, "duplicate entry " + std::to_string(n));
    try {
      beta.set(n, std::move(value));
    } catch (const std::out_of_range& e) {
      fail(line.number, e.what());
    }
  }
  return beta;
}

void write_one_cochain(std::ostream& out, const OneCochain& beta) {
  out << "window\t" << beta.window() << '\n';
  for (const auto& [n, value] : beta.values()) out << n << '\t' << value.str() << '\n';
}

}  // namespace vira
