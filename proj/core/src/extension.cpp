#include "vira/extension.hpp"

namespace vira {

namespace {

std::string pair_text(Index m, Index n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

BaseAlgebra BaseAlgebra::witt() { return {"witt", witt_bracket_basis}; }

BaseAlgebra BaseAlgebra::abelian() {
  return {"abelian", [](Index, Index) { return WittVector{}; }};
}

WittVector BaseAlgebra::operator()(const WittVector& x, const WittVector& y) const {
  return bilinear_extend(bracket, x, y);
}

ExtElement ext_bracket(const BaseAlgebra& base, const CocycleOracle& omega, const ExtElement& u,
                       const ExtElement& v) {
  return {base(u.body, v.body), omega.evaluate(u.body, v.body)};
}

ExtElement emb(const Scalar& a) { return {WittVector{}, a}; }

WittVector proj(const ExtElement& u) { return u.body; }

ExtElement std_section(const WittVector& x) { return {x, Scalar{}}; }

ExtElement twist_by_coboundary(const OneCochain& beta, const ExtElement& u) {
  return {u.body, u.center - beta.evaluate(u.body)};
}

VerificationReport check_virasoro_constants(Index max_index, const SweepOptions& opts) {
  VerificationReport report;
  report.check_name = "virasoro-constants";
  report.parameters["max_index"] = std::to_string(max_index);

  const auto base = BaseAlgebra::witt();
  const auto omega = virasoro_oracle();
  const Index width = 2 * max_index + 1;
  // Pairs (m, n) first, then the central checks [C, L(n)].
  const auto pairs = static_cast<std::size_t>(width * width);
  const auto total = pairs + static_cast<std::size_t>(width);
  auto outcome = run_sweep(
      total,
      [&](std::size_t i) -> std::optional<Counterexample> {
        if (i < pairs) {
          const Index m = static_cast<Index>(i) / width - max_index;
          const Index n = static_cast<Index>(i) % width - max_index;
          const ExtElement got = ext_bracket(base, omega, generator(m), generator(n));
          const Scalar sm{m};
          ExtElement want{m == n ? WittVector{} : WittVector::basis(m + n, Scalar{m - n}),
                          m + n == 0 ? (sm * sm * sm - sm) / Scalar{12} : Scalar{}};
          if (got == want) return std::nullopt;
          return Counterexample{pair_text(m, n), "[L(m), L(n)]", render_ext(want), render_ext(got)};
        }
        const Index n = static_cast<Index>(i - pairs) - max_index;
        const ExtElement got = ext_bracket(base, omega, emb(Scalar{1}), generator(n));
        if (got == ExtElement{}) return std::nullopt;
        return Counterexample{std::to_string(n), "[C, L(n)]", "0", render_ext(got)};
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

VerificationReport check_heisenberg_constants(Index max_index, const SweepOptions& opts) {
  VerificationReport report;
  report.check_name = "heisenberg-constants";
  report.parameters["max_index"] = std::to_string(max_index);

  const auto base = BaseAlgebra::abelian();
  const auto omega = heisenberg_oracle();
  const Index width = 2 * max_index + 1;
  const auto pairs = static_cast<std::size_t>(width * width);
  auto outcome = run_sweep(
      pairs + static_cast<std::size_t>(width),
      [&](std::size_t i) -> std::optional<Counterexample> {
        if (i < pairs) {
          const Index k = static_cast<Index>(i) / width - max_index;
          const Index l = static_cast<Index>(i) % width - max_index;
          const ExtElement got = ext_bracket(base, omega, generator(k), generator(l));
          const ExtElement want{WittVector{}, k + l == 0 ? Scalar{k} : Scalar{}};
          if (got == want) return std::nullopt;
          return Counterexample{pair_text(k, l), "[J(k), J(l)]", render_ext(want, "K"),
                                render_ext(got, "K")};
        }
        const Index k = static_cast<Index>(i - pairs) - max_index;
        const ExtElement got = ext_bracket(base, omega, emb(Scalar{1}), generator(k));
        if (got == ExtElement{}) return std::nullopt;
        return Counterexample{std::to_string(k), "[K, J(k)]", "0", render_ext(got, "K")};
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

VerificationReport check_extension_predicate(const BaseAlgebra& base, const CocycleOracle& omega,
                                             Index max_index, const SweepOptions& opts) {
  VerificationReport report;
  report.check_name = "extension-predicate";
  report.parameters["base"] = base.name;
  report.parameters["cocycle"] = omega.name();
  report.parameters["max_index"] = std::to_string(max_index);

  const Index width = 2 * max_index + 1;
  const auto n_single = static_cast<std::size_t>(width);
  const auto n_pairs = static_cast<std::size_t>(width * width);

  // [0, width): centrality and section/embedding composites for l(n);
  // [width, width + width^2): homomorphism property of proj on pairs.
  auto outcome = run_sweep(
      n_single + n_pairs,
      [&](std::size_t i) -> std::optional<Counterexample> {
        if (i < n_single) {
          const Index n = static_cast<Index>(i) - max_index;
          const ExtElement u = generator(n);
          const ExtElement c = ext_bracket(base, omega, emb(Scalar{1}), u);
          if (c != ExtElement{}) {
            return Counterexample{std::to_string(n), "centrality [emb(1), (l(n),0)]", "0",
                                  render_ext(c)};
          }
          const ExtElement c2 = ext_bracket(base, omega, u, emb(Scalar{1}));
          if (c2 != ExtElement{}) {
            return Counterexample{std::to_string(n), "centrality [(l(n),0), emb(1)]", "0",
                                  render_ext(c2)};
          }
          if (!proj(emb(Scalar{1})).is_zero()) {
            return Counterexample{std::to_string(n), "proj(emb(1))", "0",
                                  render_witt(proj(emb(Scalar{1})))};
          }
          if (proj(std_section(ell(n))) != ell(n)) {
            return Counterexample{std::to_string(n), "proj(std_section(l(n)))", render_witt(ell(n)),
                                  render_witt(proj(std_section(ell(n))))};
          }
          return std::nullopt;
        }
        const auto j = static_cast<Index>(i - n_single);
        const Index m = j / width - max_index;
        const Index n = j % width - max_index;
        // Arbitrary centre components must not matter.
        const ExtElement u{ell(m), Scalar{m + 3}};
        const ExtElement v{ell(n), Scalar(n, 7)};
        const WittVector lhs = proj(ext_bracket(base, omega, u, v));
        const WittVector rhs = base(proj(u), proj(v));
        if (lhs == rhs) return std::nullopt;
        return Counterexample{pair_text(m, n), "proj([u, v]) vs [proj u, proj v]", render_witt(rhs),
                              render_witt(lhs)};
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

std::string render_ext(const ExtElement& u, const std::string& central_symbol) {
  return render_witt(u.body) + " ⊕ " + u.center.str() + "·" + central_symbol;
}

}  // namespace vira
