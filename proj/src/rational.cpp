#include "pertex/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pertex {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  auto malformed = [&] {
    return std::invalid_argument("malformed rational '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  auto read_integer = [&](bool allow_sign) {
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw malformed();
    return (negative ? "-" : "") + std::string(text.substr(start, pos - start));
  };

  std::string num = read_integer(true);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_integer(false);
  }
  if (pos != text.size()) throw malformed();
  mpz_class d(den);
  if (d == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  return Rational(mpz_class(num), d);
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  if (is_zero() && exponent < 0) throw std::domain_error("zero raised to a negative power");
  unsigned long e =
      exponent > 0 ? static_cast<unsigned long>(exponent) : -static_cast<unsigned long>(exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), e);
  // num/den is already reduced because the base was.
  if (exponent < 0) std::swap(num, den);
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational falling_factorial(const Rational& alpha, unsigned k) {
  Rational result(1);
  Rational factor = alpha;
  for (unsigned j = 0; j < k; ++j) {
    result *= factor;
    factor -= Rational(1);
  }
  return result;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

} // namespace pertex
