#include "vira/cohomology.hpp"

#include <cstdlib>
#include <vector>

namespace vira {

namespace {

Index abs_index(Index n) { return n < 0 ? -n : n; }

std::string triple_text(Index n, Index m, Index k) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
}

std::string pair_text(Index m, Index n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace

// --- OneCochain -------------------------------------------------------------

OneCochain::OneCochain(Index window) : window_(window) {
  if (window < 0) throw std::invalid_argument("cochain window must be non-negative");
}

Scalar OneCochain::operator()(Index n) const {
  const auto it = values_.find(n);
  return it == values_.end() ? Scalar{} : it->second;
}

void OneCochain::set(Index n, Scalar value) {
  if (abs_index(n) > window_) {
    throw std::out_of_range("cochain index " + std::to_string(n) + " outside window " +
                            std::to_string(window_));
  }
  if (value.is_zero()) {
    values_.erase(n);
  } else {
    values_[n] = std::move(value);
  }
}

Scalar OneCochain::evaluate(const WittVector& x) const {
  Scalar out;
  for (const auto& [n, c] : x) out += c * (*this)(n);
  return out;
}

OneCochain operator+(const OneCochain& a, const OneCochain& b) {
  OneCochain out(std::max(a.window_, b.window_));
  for (Index n = -out.window_; n <= out.window_; ++n) out.set(n, a(n) + b(n));
  return out;
}

OneCochain operator*(const Scalar& s, const OneCochain& a) {
  OneCochain out(a.window_);
  for (const auto& [n, v] : a.values_) out.set(n, s * v);
  return out;
}

// --- TwoCocycleTable --------------------------------------------------------

TwoCocycleTable::TwoCocycleTable(Index window) : window_(window) {
  if (window < 0) throw std::invalid_argument("cocycle window must be non-negative");
}

Scalar TwoCocycleTable::operator()(Index m, Index n) const {
  if (m == n) return {};
  if (m > n) return -(*this)(n, m);
  const auto it = entries_.find({m, n});
  return it == entries_.end() ? Scalar{} : it->second;
}

void TwoCocycleTable::set(Index m, Index n, Scalar value) {
  if (m >= n) {
    throw std::invalid_argument("cocycle entries are stored with m < n, got " + pair_text(m, n));
  }
  if (abs_index(m) > window_ || abs_index(n) > window_) {
    throw std::out_of_range("cocycle entry " + pair_text(m, n) + " outside window " +
                            std::to_string(window_));
  }
  if (value.is_zero()) {
    entries_.erase({m, n});
  } else {
    entries_[{m, n}] = std::move(value);
  }
}

// --- CocycleOracle ----------------------------------------------------------

CocycleOracle::CocycleOracle() : CocycleOracle("0", [](Index, Index) { return Scalar{}; }) {}

CocycleOracle::CocycleOracle(std::string name, Rule rule, std::optional<Index> domain)
    : name_(std::move(name)), rule_(std::make_shared<const Rule>(std::move(rule))), domain_(domain) {}

CocycleOracle CocycleOracle::zero() { return CocycleOracle(); }

CocycleOracle CocycleOracle::from_table(TwoCocycleTable table) {
  const Index w = table.window();
  return CocycleOracle(
      "table", [t = std::move(table)](Index m, Index n) { return t(m, n); }, w);
}

Scalar CocycleOracle::operator()(Index m, Index n) const {
  if (m == n) return {};
  if (m > n) return -(*rule_)(n, m);
  return (*rule_)(m, n);
}

Scalar CocycleOracle::evaluate(const WittVector& x, const WittVector& y) const {
  return bilinear_extend([this](Index m, Index n) { return (*this)(m, n); }, x, y);
}

bool CocycleOracle::knows(Index m, Index n) const {
  return !domain_ || (abs_index(m) <= *domain_ && abs_index(n) <= *domain_);
}

namespace {

std::optional<Index> meet(std::optional<Index> a, std::optional<Index> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

CocycleOracle operator+(const CocycleOracle& a, const CocycleOracle& b) {
  return CocycleOracle(
      "(" + a.name_ + " + " + b.name_ + ")",
      [ra = a.rule_, rb = b.rule_](Index m, Index n) { return (*ra)(m, n) + (*rb)(m, n); },
      meet(a.domain_, b.domain_));
}

CocycleOracle operator*(const Scalar& s, const CocycleOracle& a) {
  return CocycleOracle(
      s.str() + "*" + a.name_, [s, ra = a.rule_](Index m, Index n) { return s * (*ra)(m, n); },
      a.domain_);
}

// --- concrete cocycles ------------------------------------------------------

Scalar virasoro_cocycle(Index m, Index n) {
  if (m + n != 0) return {};
  const mpz_class mm(static_cast<long>(m));
  return Scalar(mpq_class(mm * mm * mm - mm, 12));
}

CocycleOracle virasoro_oracle() { return CocycleOracle("omega_vir", virasoro_cocycle); }

CocycleOracle coboundary(const OneCochain& beta) {
  return CocycleOracle("d(beta)", [beta](Index m, Index n) { return Scalar{m - n} * beta(m + n); });
}

CocycleOracle heisenberg_oracle() {
  return CocycleOracle("omega_hei", [](Index k, Index l) { return k + l == 0 ? Scalar{k} : Scalar{}; });
}

// --- identity checks --------------------------------------------------------

Scalar cocycle_identity_defect(const CocycleOracle& omega, Index n, Index m, Index k) {
  return Scalar{m - k} * omega(n, m + k) + Scalar{k - n} * omega(m, n + k) +
         Scalar{n - m} * omega(k, n + m);
}

VerificationReport check_cocycle_identity(const CocycleOracle& omega, Index window,
                                          const SweepOptions& opts) {
  VerificationReport report;
  report.check_name = "cocycle-identity";
  report.parameters["cocycle"] = omega.name();
  report.parameters["window"] = std::to_string(window);
  if (window < 0) {
    report.status = Status::input_error;
    report.message = "window must be non-negative";
    return report;
  }

  struct Triple {
    Index n, m, k;
  };
  std::vector<Triple> triples;
  std::uint64_t skipped = 0;
  for (Index n = -window; n <= window; ++n) {
    for (Index m = -window; m <= window; ++m) {
      for (Index k = -window; k <= window; ++k) {
        if (omega.knows(n, m + k) && omega.knows(m, n + k) && omega.knows(k, n + m)) {
          triples.push_back({n, m, k});
        } else {
          ++skipped;
        }
      }
    }
  }
  if (omega.domain()) report.parameters["skipped"] = std::to_string(skipped);

  auto outcome = run_sweep(
      triples.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const auto [n, m, k] = triples[i];
        const Scalar defect = cocycle_identity_defect(omega, n, m, k);
        if (defect.is_zero()) return std::nullopt;
        return Counterexample{triple_text(n, m, k),
                              "(m-k)w(n,m+k) + (k-n)w(m,n+k) + (n-m)w(k,n+m)", "0",
                              defect.str()};
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

bool virasoro_polynomial_identity(Index m, Index n) {
  const mpz_class M(static_cast<long>(m));
  const mpz_class N(static_cast<long>(n));
  const mpz_class S = N + M;
  const mpz_class lhs = (2 * M + N) * (N * N * N - N);
  const mpz_class rhs = (N - M) * (S * S * S - S) + (2 * N + M) * (M * M * M - M);
  return lhs == rhs;
}

NotACocycleError::NotACocycleError(VerificationReport report)
    : std::runtime_error("input is not a 2-cocycle on the window" +
                         (report.counterexample ? ": identity fails at (n,m,k) = " +
                                                      report.counterexample->indices
                                                : std::string{})),
      report_(std::move(report)) {}

CocycleReduction reduce_cocycle(const CocycleOracle& omega, Index window, const SweepOptions& opts) {
  if (window < 2) throw std::invalid_argument("reduction needs window >= 2");
  if (omega.domain() && *omega.domain() < window) {
    throw std::invalid_argument("window " + std::to_string(window) + " exceeds the cocycle's window " +
                                std::to_string(*omega.domain()));
  }

  auto precondition = check_cocycle_identity(omega, window, opts);
  if (!precondition.passed()) throw NotACocycleError(std::move(precondition));

  OneCochain beta(window);
  beta.set(0, Scalar(-1, 2) * omega(1, -1));
  for (Index n = -window; n <= window; ++n) {
    if (n != 0) beta.set(n, omega(0, n) / Scalar{n});
  }

  const CocycleOracle corrected = omega + coboundary(beta);
  const Scalar r = Scalar{2} * corrected(2, -2);

  VerificationReport residual;
  residual.check_name = "reduction-residual";
  residual.parameters["cocycle"] = omega.name();
  residual.parameters["window"] = std::to_string(window);
  residual.parameters["r"] = r.str();

  struct Pair {
    Index m, n;
  };
  std::vector<Pair> pairs;
  for (Index m = -window; m <= window; ++m) {
    for (Index n = -window; n <= window; ++n) {
      if (abs_index(m + n) <= window) pairs.push_back({m, n});
    }
  }
  auto outcome = run_sweep(
      pairs.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const auto [m, n] = pairs[i];
        const Scalar lhs = corrected(m, n);
        const Scalar rhs = r * virasoro_cocycle(m, n);
        if (lhs == rhs) return std::nullopt;
        return Counterexample{pair_text(m, n), "(w + d(beta))(l(m), l(n))", rhs.str(), lhs.str()};
      },
      opts);
  apply_outcome(residual, std::move(outcome));

  return {std::move(beta), r, std::move(precondition), std::move(residual)};
}

std::optional<std::pair<Index, Index>> nontriviality_witness(const CocycleOracle& omega,
                                                             Index window) {
  std::vector<Scalar> ratio(static_cast<std::size_t>(std::max<Index>(window, 0)) + 1);
  Index top = 0;
  for (Index n = 1; n <= window && omega.knows(n, -n); ++n) {
    ratio[static_cast<std::size_t>(n)] = omega(n, -n) / Scalar{2 * n};
    top = n;
  }
  for (Index n2 = 2; n2 <= top; ++n2) {
    for (Index n1 = 1; n1 < n2; ++n1) {
      if (ratio[static_cast<std::size_t>(n1)] != ratio[static_cast<std::size_t>(n2)]) {
        return std::pair{n1, n2};
      }
    }
  }
  return std::nullopt;
}

TwoCocycleTable tabulate(const CocycleOracle& omega, Index window) {
  TwoCocycleTable table(window);
  for (Index m = -window; m <= window; ++m) {
    for (Index n = m + 1; n <= window; ++n) table.set(m, n, omega(m, n));
  }
  return table;
}

}  // namespace vira
