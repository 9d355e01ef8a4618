#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace vira {

/// Weakly decreasing list of positive integers. Encodes the monomial
/// X(-p0) X(-p1) ... X(-pr) applied to a highest weight vector; the empty
/// partition is the highest weight vector itself.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t length() const { return parts_.size(); }
  int level() const { return level_; }
  /// Largest part, 0 for the empty partition.
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int part) const;

  /// Copy with `part` inserted at its sorted position.
  Partition with_part(int part) const;
  /// Copy with one occurrence of `part` removed; `part` must be present.
  Partition without_part(int part) const;
  /// Copy without the leading (largest) part.
  Partition tail() const;

  /// Lexicographic on the parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int level_ = 0;
};

/// Orders by level, then lexicographically by parts.
struct GradedOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.level() != b.level()) return a.level() < b.level();
    return a < b;
  }
};

/// All partitions of `level`, in GradedOrder.
std::vector<Partition> partitions_of(int level);

/// All partitions with level in [0, max_level], in GradedOrder.
std::vector<Partition> partitions_up_to(int max_level);

/// "(5,2,2)"; "()" for the empty partition.
std::string to_string(const Partition& p);

}  // namespace vira
