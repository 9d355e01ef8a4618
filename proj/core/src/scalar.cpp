#include "vira/scalar.hpp"

#include <cctype>
#include <ostream>

namespace vira {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

ScalarParseError::ScalarParseError(std::string_view text)
    : std::invalid_argument("invalid scalar '" + std::string(text) + "'") {}

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (rest.starts_with(kUnicodeMinus)) {
    negative = true;
    rest.remove_prefix(kUnicodeMinus.size());
  } else if (rest.starts_with('-')) {
    negative = true;
    rest.remove_prefix(1);
  }

  std::string_view num_text = rest;
  std::string_view den_text = "1";
  if (const auto slash = rest.find('/'); slash != std::string_view::npos) {
    num_text = rest.substr(0, slash);
    den_text = rest.substr(slash + 1);
  }
  if (!all_digits(num_text) || !all_digits(den_text)) throw ScalarParseError(text);

  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw ScalarParseError(text);
  if (negative) num = -num;
  return Scalar(mpq_class(num, den));
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar out{1};
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace vira
