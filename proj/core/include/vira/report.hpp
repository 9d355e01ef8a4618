#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace vira {

enum class Status { pass, fail, input_error };

std::string to_string(Status s);
/// Inverse of to_string; throws std::invalid_argument on unknown text.
Status status_from_string(const std::string& text);

/// First failing case of a sweep. Every field is exact text.
struct Counterexample {
  std::string indices;
  std::string input;
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of one named verification sweep.
///
/// status == fail carries the lexicographically first counterexample;
/// status == pass never carries one.
struct VerificationReport {
  std::string check_name;
  std::map<std::string, std::string> parameters;
  Status status = Status::pass;
  std::optional<Counterexample> counterexample;
  std::uint64_t checked_count = 0;
  std::string message;

  bool passed() const { return status == Status::pass; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace vira
