#pragma once

#include <string>

#include "vira/fock.hpp"
#include "vira/free_vector.hpp"
#include "vira/partition.hpp"
#include "vira/report.hpp"
#include "vira/scalar.hpp"
#include "vira/sweep.hpp"

namespace vira {

/// Vector in the Virasoro Verma module of central charge c and conformal
/// weight h, on the basis L(-n_m) ... L(-n_1) |c,h> with n_m >= ... >= n_1 >= 1
/// (the partition (n_m, ..., n_1)).
class VermaVector {
 public:
  VermaVector(Scalar c, Scalar h, PartitionVector terms = {});

  static VermaVector highest_weight(const Scalar& c, const Scalar& h);
  static VermaVector basis(const Scalar& c, const Scalar& h, const Partition& p,
                           const Scalar& coeff = Scalar{1});

  const Scalar& c() const { return c_; }
  const Scalar& h() const { return h_; }
  const PartitionVector& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  Scalar coeff(const Partition& p) const { return terms_.coeff(p); }

  VermaVector& operator+=(const VermaVector& o);
  VermaVector& operator-=(const VermaVector& o);
  VermaVector& operator*=(const Scalar& s) {
    terms_ *= s;
    return *this;
  }
  void add_scaled(const Scalar& s, const VermaVector& o);

  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend VermaVector operator*(const Scalar& s, VermaVector v) { return v *= s; }
  friend bool operator==(const VermaVector&, const VermaVector&) = default;

 private:
  void require_same_module(const VermaVector& o) const;

  Scalar c_;
  Scalar h_;
  PartitionVector terms_;
};

/// Recursion statistics of verma_L_action.
struct ActionStats {
  int max_depth = 0;
  long calls = 0;
};

/// Action of L(a), by moving L(a) past the leading generator of each monomial:
///   L(a) L(-p) rest = L(-p) L(a) rest + (a+p) L(a-p) rest + delta(a,p) (a^3-a)/12 c rest
/// until it is absorbed as a new leading generator or reaches |c,h>.
VermaVector verma_L_action(Index a, const VermaVector& v, ActionStats* stats = nullptr);

/// Action of the central element: c v.
VermaVector verma_C_action(const VermaVector& v);

/// [L(n), L(m)] = (n-m) L(n+m) + delta(n+m,0) (n^3-n)/12 c for |n|, |m| <=
/// max_index on every basis vector of level <= max_level.
VerificationReport check_verma_relations(Index max_index, int max_level, const Scalar& c,
                                         const Scalar& h, const SweepOptions& opts = {});

/// L(0) v = h v, C v = c v and L(n) v = 0 for 1 <= n <= 10 on the highest
/// weight vector.
VerificationReport verma_hw_check(const Scalar& c, const Scalar& h);

/// Raised when the universal map is applied outside c = 1, h = alpha^2/2.
class UniversalMapPrecondition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The module map from the Verma module with c = 1, h = alpha^2/2 to the
/// Fock space of charge alpha sending |c,h> to |alpha>: each monomial
/// L(-n_m) ... L(-n_1) |c,h> goes to the Sugawara operators applied to the
/// vacuum in the same order.
FockVector universal_map(const Scalar& alpha, const VermaVector& v);

/// universal_map(L(a) x) == L(a) universal_map(x) for |a| <= max_index and
/// basis vectors x of level <= max_level.
VerificationReport check_intertwining(const Scalar& alpha, Index max_index, int max_level,
                                      const SweepOptions& opts = {});

/// "coef·L(-n_m)…L(-n_1)|c,h⟩ + ...", sorted by level then partition.
std::string render_verma(const VermaVector& v);

}  // namespace vira
