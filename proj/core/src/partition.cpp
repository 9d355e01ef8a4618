#include "vira/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vira {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  level_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
  const auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), part, std::greater<>());
  return static_cast<int>(hi - lo);
}

Partition Partition::with_part(int part) const {
  if (part <= 0) throw std::invalid_argument("partition parts must be positive");
  Partition out = *this;
  const auto pos = std::upper_bound(out.parts_.begin(), out.parts_.end(), part, std::greater<>());
  out.parts_.insert(pos, part);
  out.level_ += part;
  return out;
}

Partition Partition::without_part(int part) const {
  Partition out = *this;
  const auto pos = std::lower_bound(out.parts_.begin(), out.parts_.end(), part, std::greater<>());
  if (pos == out.parts_.end() || *pos != part) {
    throw std::invalid_argument("part " + std::to_string(part) + " not present");
  }
  out.parts_.erase(pos);
  out.level_ -= part;
  return out;
}

Partition Partition::tail() const {
  if (parts_.empty()) throw std::invalid_argument("tail of the empty partition");
  return without_part(parts_.front());
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int level) {
  if (level < 0) return {};
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(level, level, prefix, out);
  std::sort(out.begin(), out.end(), GradedOrder{});
  return out;
}

std::vector<Partition> partitions_up_to(int max_level) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_level; ++d) {
    auto level = partitions_of(d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

}  // namespace vira
