#include "vira/fock.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace vira {

FockVector::FockVector(Scalar alpha, PartitionVector terms)
    : alpha_(std::move(alpha)), terms_(std::move(terms)) {}

FockVector FockVector::vacuum(const Scalar& alpha) { return basis(alpha, Partition{}); }

FockVector FockVector::basis(const Scalar& alpha, const Partition& p, const Scalar& coeff) {
  return FockVector(alpha, PartitionVector::basis(p, coeff));
}

void FockVector::require_same_module(const FockVector& o) const {
  if (alpha_ != o.alpha_) {
    throw ModuleMismatch("Fock vectors of charge " + alpha_.str() + " and " + o.alpha_.str() +
                         " cannot be combined");
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  require_same_module(o);
  terms_ += o.terms_;
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  require_same_module(o);
  terms_ -= o.terms_;
  return *this;
}

void FockVector::add_scaled(const Scalar& s, const FockVector& o) {
  require_same_module(o);
  terms_.add_scaled(s, o.terms_);
}

FockVector j_action(Index k, const FockVector& v) {
  PartitionVector out;
  if (k == 0) {
    out.add_scaled(v.alpha(), v.terms());
    return FockVector(v.alpha(), std::move(out));
  }
  for (const auto& [lambda, c] : v.terms()) {
    if (k < 0) {
      out.add_term(lambda.with_part(static_cast<int>(-k)), c);
      continue;
    }
    const int part = static_cast<int>(k);
    const int mult = part <= lambda.max_part() ? lambda.multiplicity(part) : 0;
    if (mult == 0) continue;
    out.add_term(lambda.without_part(part), c * Scalar{static_cast<Index>(mult) * k});
  }
  return FockVector(v.alpha(), std::move(out));
}

Index truncation_bound(const FockVector& v) {
  int top = 0;
  for (const auto& [lambda, c] : v.terms()) top = std::max(top, lambda.max_part());
  return Index{1} + top;
}

FockVector normal_pair(Index k, Index l, const FockVector& v) {
  if (k <= l) return j_action(k, j_action(l, v));
  return j_action(l, j_action(k, v));
}

FockVector sugawara_L(Index n, const FockVector& v) {
  const Index bound = truncation_bound(v);
  FockVector out(v.alpha());
  for (Index k = n - bound + 1; k < bound; ++k) out += normal_pair(n - k, k, v);
  out *= Scalar(1, 2);
  return out;
}

namespace {

std::string indices_text(std::initializer_list<Index> xs, const Partition& p) {
  std::string out = "(";
  bool first = true;
  for (Index x : xs) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(x);
  }
  return out + ") on " + to_string(p);
}

// Enumerates (i_0, ..., i_{r-1}, partition) with every i_j in [-bound, bound],
// the partition varying fastest.
struct IndexGrid {
  IndexGrid(std::size_t rank, Index bound, std::size_t partitions)
      : rank(rank), bound(bound), width(2 * bound + 1), partitions(partitions) {}

  std::size_t size() const {
    std::size_t n = partitions;
    for (std::size_t j = 0; j < rank; ++j) n *= static_cast<std::size_t>(width);
    return n;
  }

  std::pair<std::vector<Index>, std::size_t> decode(std::size_t i) const {
    const std::size_t p = i % partitions;
    i /= partitions;
    std::vector<Index> idx(rank);
    for (std::size_t j = rank; j-- > 0;) {
      idx[j] = static_cast<Index>(i % static_cast<std::size_t>(width)) - bound;
      i /= static_cast<std::size_t>(width);
    }
    return {idx, p};
  }

  std::size_t rank;
  Index bound;
  Index width;
  std::size_t partitions;
};

VerificationReport fock_report(std::string name, const Scalar& alpha, int max_level) {
  VerificationReport report;
  report.check_name = std::move(name);
  report.parameters["alpha"] = alpha.str();
  report.parameters["max_level"] = std::to_string(max_level);
  return report;
}

}  // namespace

VerificationReport check_heisenberg_relations(Index max_index, int max_level, const Scalar& alpha,
                                              const SweepOptions& opts) {
  auto report = fock_report("heisenberg-relations", alpha, max_level);
  report.parameters["max_index"] = std::to_string(max_index);
  const auto basis = partitions_up_to(max_level);
  const IndexGrid grid(2, max_index, basis.size());

  auto outcome = run_sweep(
      grid.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const auto [idx, p] = grid.decode(i);
        const Index k = idx[0];
        const Index l = idx[1];
        const FockVector v = FockVector::basis(alpha, basis[p]);
        const FockVector lhs = j_action(k, j_action(l, v)) - j_action(l, j_action(k, v));
        const FockVector rhs = (k + l == 0 ? Scalar{k} : Scalar{}) * v;
        if (lhs == rhs) return std::nullopt;
        return Counterexample{indices_text({k, l}, basis[p]), "J(k)J(l) - J(l)J(k)",
                              render_fock(rhs), render_fock(lhs)};
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

VerificationReport check_normal_pair_symmetry(Index max_index, int max_level, const Scalar& alpha,
                                              const SweepOptions& opts) {
  auto report = fock_report("normal-pair-symmetry", alpha, max_level);
  report.parameters["max_index"] = std::to_string(max_index);
  const auto basis = partitions_up_to(max_level);
  const IndexGrid grid(2, max_index, basis.size());

  auto outcome = run_sweep(
      grid.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const auto [idx, p] = grid.decode(i);
        const Index k = idx[0];
        const Index l = idx[1];
        const FockVector v = FockVector::basis(alpha, basis[p]);
        const FockVector a = normal_pair(k, l, v);
        const FockVector b = normal_pair(l, k, v);
        if (a != b) {
          return Counterexample{indices_text({k, l}, basis[p]), ":J(k)J(l): vs :J(l)J(k):",
                                render_fock(a), render_fock(b)};
        }
        const FockVector alt = k < 0 ? j_action(k, j_action(l, v)) : j_action(l, j_action(k, v));
        if (a != alt) {
          return Counterexample{indices_text({k, l}, basis[p]),
                                ":J(k)J(l): vs (k < 0 ? J(k)J(l) : J(l)J(k))", render_fock(alt),
                                render_fock(a)};
        }
        return std::nullopt;
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

VerificationReport check_normal_pair_vanishing(Index max_index, int max_level, Index margin,
                                               const Scalar& alpha, const SweepOptions& opts) {
  auto report = fock_report("normal-pair-vanishing", alpha, max_level);
  report.parameters["max_index"] = std::to_string(max_index);
  report.parameters["margin"] = std::to_string(margin);
  const auto basis = partitions_up_to(max_level);
  const IndexGrid grid(1, max_index, basis.size());

  auto outcome = run_sweep(
      grid.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const auto [idx, p] = grid.decode(i);
        const Index n = idx[0];
        const FockVector v = FockVector::basis(alpha, basis[p]);
        const Index bound = truncation_bound(v);
        for (Index k = n - bound - margin; k <= bound + margin; ++k) {
          if (n - bound < k && k < bound) continue;
          const FockVector w = normal_pair(n - k, k, v);
          if (!w.is_zero()) {
            return Counterexample{indices_text({n, k}, basis[p]), ":J(n-k)J(k): outside (n-N, N)",
                                  "0", render_fock(w)};
          }
        }
        return std::nullopt;
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

VerificationReport check_primary_field(Index max_index, int max_level, const Scalar& alpha,
                                       const SweepOptions& opts) {
  auto report = fock_report("primary-field", alpha, max_level);
  report.parameters["max_index"] = std::to_string(max_index);
  const auto basis = partitions_up_to(max_level);
  const IndexGrid grid(2, max_index, basis.size());

  auto outcome = run_sweep(
      grid.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const auto [idx, p] = grid.decode(i);
        const Index n = idx[0];
        const Index k = idx[1];
        const FockVector v = FockVector::basis(alpha, basis[p]);
        const FockVector lhs = sugawara_L(n, j_action(k, v)) - j_action(k, sugawara_L(n, v));
        const FockVector rhs = Scalar{-k} * j_action(n + k, v);
        if (lhs == rhs) return std::nullopt;
        return Counterexample{indices_text({n, k}, basis[p]), "[L(n), J(k)]", render_fock(rhs),
                              render_fock(lhs)};
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

namespace {

Scalar normal_pair_central_term(Index n, Index m, Index k) {
  if (n + m != 0) return {};
  int indicator = 0;
  if (0 <= k && k < -n) indicator += 1;
  if (-n <= k && k < 0) indicator -= 1;
  return Scalar{k * (n + k) * indicator};
}

std::optional<Counterexample> normal_pair_commutator_case(Index n, Index m, Index k,
                                                          const Partition& lambda,
                                                          const Scalar& alpha) {
  const FockVector v = FockVector::basis(alpha, lambda);
  const FockVector lhs = sugawara_L(n, normal_pair(m - k, k, v)) - normal_pair(m - k, k, sugawara_L(n, v));
  FockVector rhs = Scalar{-k} * normal_pair(m - k, n + k, v);
  rhs.add_scaled(Scalar{-(m - k)}, normal_pair(n + m - k, k, v));
  rhs.add_scaled(normal_pair_central_term(n, m, k), v);
  if (lhs == rhs) return std::nullopt;
  return Counterexample{indices_text({n, m, k}, lambda), "[L(n), :J(m-k)J(k):]", render_fock(rhs),
                        render_fock(lhs)};
}

}  // namespace

VerificationReport check_normal_pair_commutator(Index n, Index m, Index k, int max_level,
                                                const Scalar& alpha, const SweepOptions& opts) {
  auto report = fock_report("normal-pair-commutator", alpha, max_level);
  report.parameters["n"] = std::to_string(n);
  report.parameters["m"] = std::to_string(m);
  report.parameters["k"] = std::to_string(k);
  const auto basis = partitions_up_to(max_level);
  auto outcome = run_sweep(
      basis.size(),
      [&](std::size_t p) { return normal_pair_commutator_case(n, m, k, basis[p], alpha); }, opts);
  return apply_outcome(report, std::move(outcome));
}

VerificationReport check_normal_pair_commutators(Index max_nm, Index max_k, int max_level,
                                                 const Scalar& alpha, const SweepOptions& opts) {
  auto report = fock_report("normal-pair-commutator", alpha, max_level);
  report.parameters["max_index"] = std::to_string(max_nm);
  report.parameters["max_k"] = std::to_string(max_k);
  const auto basis = partitions_up_to(max_level);
  const auto width_nm = static_cast<std::size_t>(2 * max_nm + 1);
  const auto width_k = static_cast<std::size_t>(2 * max_k + 1);
  const std::size_t total = width_nm * width_nm * width_k * basis.size();

  auto outcome = run_sweep(
      total,
      [&](std::size_t i) {
        const std::size_t p = i % basis.size();
        i /= basis.size();
        const Index k = static_cast<Index>(i % width_k) - max_k;
        i /= width_k;
        const Index m = static_cast<Index>(i % width_nm) - max_nm;
        const Index n = static_cast<Index>(i / width_nm) - max_nm;
        return normal_pair_commutator_case(n, m, k, basis[p], alpha);
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

VerificationReport check_sugawara_commutator(Index max_index, int max_level, const Scalar& alpha,
                                             const SweepOptions& opts) {
  auto report = fock_report("sugawara-commutator", alpha, max_level);
  report.parameters["max_index"] = std::to_string(max_index);
  const auto basis = partitions_up_to(max_level);
  const IndexGrid grid(2, max_index, basis.size());
  const auto width = static_cast<std::size_t>(2 * max_index + 1);

  // once[(n + max_index) * |basis| + p] = L(n) applied to basis[p].
  std::vector<FockVector> once(width * basis.size(), FockVector(alpha));
  run_sweep(
      once.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const Index n = static_cast<Index>(i / basis.size()) - max_index;
        once[i] = sugawara_L(n, FockVector::basis(alpha, basis[i % basis.size()]));
        return std::nullopt;
      },
      opts);
  auto first = [&](Index n, std::size_t p) -> const FockVector& {
    return once[static_cast<std::size_t>(n + max_index) * basis.size() + p];
  };

  auto outcome = run_sweep(
      grid.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const auto [idx, p] = grid.decode(i);
        const Index n = idx[0];
        const Index m = idx[1];
        const FockVector v = FockVector::basis(alpha, basis[p]);
        const FockVector lhs = sugawara_L(n, first(m, p)) - sugawara_L(m, first(n, p));
        FockVector rhs = Scalar{n - m} * sugawara_L(n + m, v);
        if (n + m == 0) {
          const Scalar sn{n};
          rhs.add_scaled((sn * sn * sn - sn) / Scalar{12}, v);
        }
        if (lhs == rhs) return std::nullopt;
        return Counterexample{indices_text({n, m}, basis[p]), "[L(n), L(m)]", render_fock(rhs),
                              render_fock(lhs)};
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

bool weighted_sum_check(Index n) {
  if (n < 0) return false;
  mpz_class sum = 0;
  for (Index l = 0; l < n; ++l) sum += mpz_class(static_cast<long>(n - l)) * static_cast<long>(l);
  const mpz_class N(static_cast<long>(n));
  return sum * 6 == N * N * N - N;
}

VerificationReport check_weighted_sums(Index max_n) {
  VerificationReport report;
  report.check_name = "weighted-sum";
  report.parameters["max_n"] = std::to_string(max_n);
  const auto count = static_cast<std::size_t>(std::max<Index>(max_n + 1, 0));
  auto outcome = run_sweep(count, [&](std::size_t i) -> std::optional<Counterexample> {
    const auto n = static_cast<Index>(i);
    if (weighted_sum_check(n)) return std::nullopt;
    return Counterexample{std::to_string(n), "sum_{0<=l<n} (n-l) l", "(n^3-n)/6", "differs"};
  });
  return apply_outcome(report, std::move(outcome));
}

std::string render_fock(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "·";
    for (int part : lambda.parts()) os << "J(-" << part << ")";
    os << "|α⟩";
  }
  return os.str();
}

}  // namespace vira
