#include "vira/witt.hpp"

#include <sstream>

namespace vira {

WittVector witt_bracket_basis(Index m, Index n) {
  if (m == n) return {};
  return WittVector::basis(m + n, Scalar{m - n});
}

WittVector witt_bracket(const WittVector& x, const WittVector& y) {
  return bilinear_extend(witt_bracket_basis, x, y);
}

bool check_jacobi(const WittVector& x, const WittVector& y, const WittVector& z) {
  return cyclic_triple_sum(witt_bracket_basis, witt_bracket_basis, x, y, z).is_zero();
}

VerificationReport check_witt_jacobi_basis(Index max_index, const SweepOptions& opts) {
  VerificationReport report;
  report.check_name = "witt-jacobi";
  report.parameters["max_index"] = std::to_string(max_index);

  const Index width = 2 * max_index + 1;
  const auto total = static_cast<std::size_t>(width * width * width);
  auto outcome = run_sweep(
      total,
      [&](std::size_t i) -> std::optional<Counterexample> {
        const Index a = static_cast<Index>(i) / (width * width) - max_index;
        const Index b = static_cast<Index>(i) / width % width - max_index;
        const Index c = static_cast<Index>(i) % width - max_index;
        const auto indices = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")";
        if (!witt_bracket(ell(a), ell(a)).is_zero()) {
          return Counterexample{indices, "[l(a),l(a)]", "0",
                                render_witt(witt_bracket(ell(a), ell(a)))};
        }
        const auto sum = cyclic_triple_sum(witt_bracket_basis, witt_bracket_basis, ell(a), ell(b), ell(c));
        if (sum.is_zero()) return std::nullopt;
        return Counterexample{indices, "jacobi cyclic sum", "0", render_witt(sum)};
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

std::string render_witt(const WittVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*l(" << n << ")";
  }
  return os.str();
}

}  // namespace vira
