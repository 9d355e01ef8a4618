#pragma once

#include <stdexcept>
#include <string>

#include "vira/free_vector.hpp"
#include "vira/partition.hpp"
#include "vira/report.hpp"
#include "vira/scalar.hpp"
#include "vira/sweep.hpp"
#include "vira/witt.hpp"

namespace vira {

using PartitionVector = FreeVector<Partition, GradedOrder>;

/// Raised when vectors from modules with different parameters are combined.
class ModuleMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vector in the charged Fock space of charge alpha. The partition
/// (k_m, ..., k_1) stands for J(-k_m) ... J(-k_1) |alpha>.
class FockVector {
 public:
  explicit FockVector(Scalar alpha, PartitionVector terms = {});

  static FockVector vacuum(const Scalar& alpha);
  static FockVector basis(const Scalar& alpha, const Partition& p, const Scalar& coeff = Scalar{1});

  const Scalar& alpha() const { return alpha_; }
  const PartitionVector& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  Scalar coeff(const Partition& p) const { return terms_.coeff(p); }

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Scalar& s) {
    terms_ *= s;
    return *this;
  }
  /// this += s * o
  void add_scaled(const Scalar& s, const FockVector& o);

  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& s, FockVector v) { return v *= s; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  void require_same_module(const FockVector& o) const;

  Scalar alpha_;
  PartitionVector terms_;
};

/// Action of the current J(k): creation for k < 0, alpha for k = 0 and the
/// multiplicity rule k * m_k(lambda) for k > 0.
FockVector j_action(Index k, const FockVector& v);

/// 1 + largest part over the support (1 when only the vacuum or nothing is
/// present). J(l) v = 0 for every l >= the bound.
Index truncation_bound(const FockVector& v);

/// :J(k) J(l): v, the factor with the larger index acting first.
FockVector normal_pair(Index k, Index l, const FockVector& v);

/// L(n) v = 1/2 sum over n - N < k < N of :J(n-k) J(k): v with
/// N = truncation_bound(v).
FockVector sugawara_L(Index n, const FockVector& v);

/// J(k) J(l) - J(l) J(k) = k delta(k,-l) on every basis vector of level <= max_level.
VerificationReport check_heisenberg_relations(Index max_index, int max_level, const Scalar& alpha,
                                              const SweepOptions& opts = {});

/// :J(k) J(l): = :J(l) J(k): and agreement with the "J(k) J(l) if k < 0 else
/// J(l) J(k)" form, for |k|, |l| <= max_index and levels <= max_level.
VerificationReport check_normal_pair_symmetry(Index max_index, int max_level, const Scalar& alpha,
                                              const SweepOptions& opts = {});

/// :J(n-k) J(k): v = 0 for k <= n - N or k >= N (N = truncation_bound(v)),
/// tested up to `margin` indices beyond the range, |n| <= max_index.
VerificationReport check_normal_pair_vanishing(Index max_index, int max_level, Index margin,
                                               const Scalar& alpha, const SweepOptions& opts = {});

/// [L(n), J(k)] = -k J(n+k) for |n|, |k| <= max_index.
VerificationReport check_primary_field(Index max_index, int max_level, const Scalar& alpha,
                                       const SweepOptions& opts = {});

/// [L(n), :J(m-k) J(k):] = -k :J(m-k) J(n+k): - (m-k) :J(n+m-k) J(k):
///   + k (n+k) delta(n+m,0) ([0 <= k < -n] - [-n <= k < 0])
/// for one (n, m, k) on all basis vectors of level <= max_level.
VerificationReport check_normal_pair_commutator(Index n, Index m, Index k, int max_level,
                                                const Scalar& alpha, const SweepOptions& opts = {});

/// The identity above for all |n|, |m| <= max_nm and |k| <= max_k.
VerificationReport check_normal_pair_commutators(Index max_nm, Index max_k, int max_level,
                                                 const Scalar& alpha, const SweepOptions& opts = {});

/// [L(n), L(m)] = (n-m) L(n+m) + delta(n+m,0) (n^3-n)/12 for |n|, |m| <= max_index.
VerificationReport check_sugawara_commutator(Index max_index, int max_level, const Scalar& alpha,
                                             const SweepOptions& opts = {});

/// sum_{0 <= l < n} (n - l) l == (n^3 - n)/6.
bool weighted_sum_check(Index n);

/// weighted_sum_check for 0 <= n <= max_n.
VerificationReport check_weighted_sums(Index max_n);

/// "3/2·J(-2)J(-1)|α⟩ + ...", sorted by level then partition; "0" if empty.
std::string render_fock(const FockVector& v);

}  // namespace vira
