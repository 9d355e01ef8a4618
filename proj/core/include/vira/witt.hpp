#pragma once

#include <cstdint>
#include <string>

#include "vira/free_vector.hpp"
#include "vira/report.hpp"
#include "vira/sweep.hpp"

namespace vira {

using Index = std::int64_t;

/// Element of the Witt algebra; the coefficient at n is that of l(n).
using WittVector = FreeVector<Index>;

/// Basis vector l(n).
inline WittVector ell(Index n) { return WittVector::basis(n); }

/// [l(m), l(n)] = (m - n) l(m + n).
WittVector witt_bracket_basis(Index m, Index n);

/// Bilinear extension of witt_bracket_basis.
WittVector witt_bracket(const WittVector& x, const WittVector& y);

/// True iff [x,[y,z]] + [y,[z,x]] + [z,[x,y]] vanishes.
bool check_jacobi(const WittVector& x, const WittVector& y, const WittVector& z);

/// Alternating and Jacobi checks over all basis triples with |indices| <= max_index.
VerificationReport check_witt_jacobi_basis(Index max_index, const SweepOptions& opts = {});

/// "c*l(n) + ..." in increasing index order, "0" for the zero vector.
std::string render_witt(const WittVector& v);

}  // namespace vira
