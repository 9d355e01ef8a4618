#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <type_traits>
#include <utility>

#include "vira/scalar.hpp"

namespace vira {

/// Finitely supported map from a basis index to Scalar.
///
/// Zero coefficients are never stored, so equality of two vectors is
/// equality of their coefficient maps. Iteration follows `Compare`.
template <class B, class Compare = std::less<B>>
class FreeVector {
 public:
  using basis_type = B;
  using map_type = std::map<B, Scalar, Compare>;

  FreeVector() = default;

  static FreeVector basis(B b, Scalar coeff = Scalar{1}) {
    FreeVector v;
    v.add_term(std::move(b), coeff);
    return v;
  }

  Scalar coeff(const B& b) const {
    const auto it = terms_.find(b);
    return it == terms_.end() ? Scalar{} : it->second;
  }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  void add_term(const B& b, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += s * other
  void add_scaled(const Scalar& s, const FreeVector& other) {
    if (s.is_zero()) return;
    for (const auto& [b, c] : other.terms_) add_term(b, s * c);
  }

  FreeVector& operator+=(const FreeVector& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  FreeVector& operator-=(const FreeVector& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  FreeVector& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) c *= s;
    }
    return *this;
  }

  friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
  friend FreeVector operator-(FreeVector a) { return a *= Scalar{-1}; }
  friend FreeVector operator*(const Scalar& s, FreeVector v) { return v *= s; }
  friend FreeVector operator*(FreeVector v, const Scalar& s) { return v *= s; }

  friend bool operator==(const FreeVector& a, const FreeVector& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

template <class B, class C>
FreeVector<B, C> fv_add(const FreeVector<B, C>& v, const FreeVector<B, C>& w) {
  return v + w;
}

template <class B, class C>
FreeVector<B, C> fv_scale(const Scalar& s, const FreeVector<B, C>& v) {
  return s * v;
}

/// Extends a map defined on basis elements linearly: sum of c_i * op(b_i).
template <class B, class C, class Op>
auto linear_extend(Op&& basis_op, const FreeVector<B, C>& v) {
  using R = std::decay_t<std::invoke_result_t<Op&, const B&>>;
  R out{};
  for (const auto& [b, c] : v) out += c * std::invoke(basis_op, b);
  return out;
}

/// Extends a function on basis pairs bilinearly. The result type is whatever
/// `mu` returns (Scalar or a FreeVector).
template <class B, class C, class Mu>
auto bilinear_extend(Mu&& mu, const FreeVector<B, C>& x, const FreeVector<B, C>& y) {
  using R = std::decay_t<std::invoke_result_t<Mu&, const B&, const B&>>;
  R out{};
  for (const auto& [bx, cx] : x) {
    for (const auto& [by, cy] : y) out += (cx * cy) * std::invoke(mu, bx, by);
  }
  return out;
}

/// mu(x, nu(y, z)) + mu(y, nu(z, x)) + mu(z, nu(x, y)), with mu and nu given
/// on basis pairs and extended bilinearly. `nu` must land back in the same
/// free module so that `mu` can consume it.
template <class B, class C, class Mu, class Nu>
auto cyclic_triple_sum(Mu&& mu, Nu&& nu, const FreeVector<B, C>& x, const FreeVector<B, C>& y,
                       const FreeVector<B, C>& z) {
  auto out = bilinear_extend(mu, x, bilinear_extend(nu, y, z));
  out += bilinear_extend(mu, y, bilinear_extend(nu, z, x));
  out += bilinear_extend(mu, z, bilinear_extend(nu, x, y));
  return out;
}

}  // namespace vira
