#pragma once

#include <functional>
#include <string>

#include "vira/cohomology.hpp"
#include "vira/report.hpp"
#include "vira/scalar.hpp"
#include "vira/sweep.hpp"
#include "vira/witt.hpp"

namespace vira {

/// A Lie algebra on the basis indexed by the integers, given by its bracket
/// on basis pairs.
struct BaseAlgebra {
  std::string name;
  std::function<WittVector(Index, Index)> bracket;

  /// [l(m), l(n)] = (m - n) l(m + n).
  static BaseAlgebra witt();
  /// Identically zero bracket (the currents I(k) underlying Heisenberg).
  static BaseAlgebra abelian();

  WittVector operator()(const WittVector& x, const WittVector& y) const;
};

/// Element (X, A) of g + F with a one-dimensional centre.
struct ExtElement {
  WittVector body;
  Scalar center;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// [(X, A), (Y, B)] = ([X, Y], omega(X, Y)).
ExtElement ext_bracket(const BaseAlgebra& base, const CocycleOracle& omega, const ExtElement& u,
                       const ExtElement& v);

/// a -> (0, a)
ExtElement emb(const Scalar& a);
/// (X, A) -> X
WittVector proj(const ExtElement& u);
/// X -> (X, 0)
ExtElement std_section(const WittVector& x);

/// (X, A) -> (X, A - beta(X)). Carries the bracket for omega + d(beta) to
/// the bracket for omega; twisting by -beta goes the other way.
ExtElement twist_by_coboundary(const OneCochain& beta, const ExtElement& u);

/// Basis element (l(n), 0) of the extension.
inline ExtElement generator(Index n) { return std_section(ell(n)); }

/// [L(m), L(n)] = (m-n) L(m+n) + (m^3-m)/12 delta(m,-n) C and [C, L(n)] = 0
/// for |m|, |n| <= max_index.
VerificationReport check_virasoro_constants(Index max_index, const SweepOptions& opts = {});

/// [J(k), J(l)] = k delta(k,-l) K and [K, J(k)] = 0 for |k|, |l| <= max_index.
VerificationReport check_heisenberg_constants(Index max_index, const SweepOptions& opts = {});

/// Window-scale central extension checks: the embedded centre commutes with
/// every generator, proj is a bracket homomorphism, proj o emb = 0 and
/// proj o std_section = id.
VerificationReport check_extension_predicate(const BaseAlgebra& base, const CocycleOracle& omega,
                                             Index max_index, const SweepOptions& opts = {});

/// "body ⊕ c·C"
std::string render_ext(const ExtElement& u, const std::string& central_symbol = "C");

}  // namespace vira
