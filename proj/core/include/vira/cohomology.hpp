#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "vira/report.hpp"
#include "vira/scalar.hpp"
#include "vira/sweep.hpp"
#include "vira/witt.hpp"

namespace vira {

/// Linear functional on the Witt algebra, given by its values on l(n) for
/// |n| <= window. Values outside the window are zero.
class OneCochain {
 public:
  explicit OneCochain(Index window = 0);

  Index window() const { return window_; }
  Scalar operator()(Index n) const;
  /// Throws std::out_of_range if |n| > window.
  void set(Index n, Scalar value);

  /// Linear evaluation on a Witt vector.
  Scalar evaluate(const WittVector& x) const;

  const std::map<Index, Scalar>& values() const { return values_; }

  friend OneCochain operator+(const OneCochain& a, const OneCochain& b);
  friend OneCochain operator*(const Scalar& s, const OneCochain& a);
  friend OneCochain operator-(const OneCochain& a) { return Scalar{-1} * a; }
  friend bool operator==(const OneCochain&, const OneCochain&) = default;

 private:
  Index window_;
  std::map<Index, Scalar> values_;
};

/// Antisymmetric table of values on basis pairs, storing only m < n.
class TwoCocycleTable {
 public:
  explicit TwoCocycleTable(Index window = 0);

  Index window() const { return window_; }
  /// Antisymmetric lookup; zero on the diagonal and outside the window.
  Scalar operator()(Index m, Index n) const;
  /// Stores the value at (m, n) with m < n. Throws std::invalid_argument if
  /// m >= n and std::out_of_range if the pair lies outside the window.
  void set(Index m, Index n, Scalar value);

  const std::map<std::pair<Index, Index>, Scalar>& entries() const { return entries_; }

 private:
  Index window_;
  std::map<std::pair<Index, Index>, Scalar> entries_;
};

/// Scalar-valued antisymmetric function on Witt basis pairs.
///
/// The wrapped rule is consulted only for m < n; the other orders follow by
/// antisymmetry. An oracle may declare a domain bound: pairs with an index
/// beyond it are not known to the oracle (a table read from a file), and
/// sweeps skip any case that would need them.
class CocycleOracle {
 public:
  using Rule = std::function<Scalar(Index, Index)>;

  CocycleOracle();
  CocycleOracle(std::string name, Rule rule, std::optional<Index> domain = std::nullopt);

  static CocycleOracle zero();
  static CocycleOracle from_table(TwoCocycleTable table);

  Scalar operator()(Index m, Index n) const;

  /// Bilinear evaluation on Witt vectors.
  Scalar evaluate(const WittVector& x, const WittVector& y) const;

  const std::string& name() const { return name_; }
  std::optional<Index> domain() const { return domain_; }
  bool knows(Index m, Index n) const;

  friend CocycleOracle operator+(const CocycleOracle& a, const CocycleOracle& b);
  friend CocycleOracle operator*(const Scalar& s, const CocycleOracle& a);

 private:
  std::string name_;
  std::shared_ptr<const Rule> rule_;
  std::optional<Index> domain_;
};

/// (m^3 - m)/12 if m + n == 0, else 0.
Scalar virasoro_cocycle(Index m, Index n);

CocycleOracle virasoro_oracle();

/// (m, n) -> (m - n) * beta(l(m + n)).
CocycleOracle coboundary(const OneCochain& beta);

/// (k, l) -> k if k + l == 0, else 0.
CocycleOracle heisenberg_oracle();

/// Left minus right side of the basis identity
/// (m-k) w(n, m+k) + (k-n) w(m, n+k) + (n-m) w(k, n+m).
Scalar cocycle_identity_defect(const CocycleOracle& omega, Index n, Index m, Index k);

/// Sweeps the identity above over |n|, |m|, |k| <= window.
VerificationReport check_cocycle_identity(const CocycleOracle& omega, Index window,
                                          const SweepOptions& opts = {});

/// (2m+n)(n^3-n) == (n-m)((n+m)^3-(n+m)) + (2n+m)(m^3-m), evaluated in exact
/// integers.
bool virasoro_polynomial_identity(Index m, Index n);

/// Raised when the reduction input does not pass the cocycle identity.
class NotACocycleError : public std::runtime_error {
 public:
  explicit NotACocycleError(VerificationReport report);
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

struct CocycleReduction {
  OneCochain beta;
  Scalar r;
  VerificationReport precondition;
  VerificationReport residual;
};

/// Brings a cocycle to the normal form omega + d(beta) = r * omega_vir on the
/// window. beta is determined by w(l0, ln) and w(l1, l-1), r by the (2, -2)
/// value of the corrected cocycle. The residual compares both sides on every
/// pair |m|, |n| <= window with |m + n| <= window (the pairs on which
/// d(beta) only involves window values of beta).
///
/// Throws std::invalid_argument if window < 2 and NotACocycleError if the
/// cocycle identity fails on the window.
CocycleReduction reduce_cocycle(const CocycleOracle& omega, Index window,
                                const SweepOptions& opts = {});

/// Searches 1 <= n1 < n2 <= window, increasing n2 then n1, for the first pair
/// where w(l(n), l(-n)) / (2n) disagrees. Such a pair certifies that omega is
/// not a coboundary.
std::optional<std::pair<Index, Index>> nontriviality_witness(const CocycleOracle& omega,
                                                             Index window);

/// Malformed cocycle or cochain file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the tab-separated cocycle table format:
///   window<TAB>W
///   m<TAB>n<TAB>value      (m < n, max(|m|,|n|) <= W)
/// Lines starting with '#' and blank lines are ignored. Throws InputError.
TwoCocycleTable read_cocycle_table(std::istream& in);
void write_cocycle_table(std::ostream& out, const TwoCocycleTable& table);

/// Reads `window<TAB>W` followed by `n<TAB>value` records. Throws InputError.
OneCochain read_one_cochain(std::istream& in);
void write_one_cochain(std::ostream& out, const OneCochain& beta);

/// Tabulates an oracle on all pairs m < n with |m|, |n| <= window.
TwoCocycleTable tabulate(const CocycleOracle& omega, Index window);

}  // namespace vira
