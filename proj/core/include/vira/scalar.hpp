#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vira {

/// Raised when text does not follow the "p/q" scalar grammar.
class ScalarParseError : public std::invalid_argument {
 public:
  explicit ScalarParseError(std::string_view text);
};

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always held in lowest terms with a positive denominator, so two scalars
/// are equal exactly when their numerators and denominators agree.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral T>
  Scalar(T n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Scalar(std::int64_t num, std::int64_t den);

  explicit Scalar(mpq_class q);

  /// Parses "p", "p/q", "-p/q" or "−p/q" (U+2212). Throws ScalarParseError.
  static Scalar parse(std::string_view text);

  /// Lowest-terms text, "/1" suppressed, ASCII minus.
  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  Scalar& operator+=(const Scalar& o) {
    q_ += o.q_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    q_ -= o.q_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    q_ *= o.q_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.q_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// n-th power for small non-negative exponents.
Scalar pow(const Scalar& base, unsigned exponent);

}  // namespace vira
