#ifndef PERTEX_RATIONAL_HPP
#define PERTEX_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace pertex {

// Exact rational scalar backed by GMP. Always stored reduced with a
// positive denominator; equality is structural equality of the reduced
// form. All operations are exact, nothing is ever rounded.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {} // NOLINT: integers embed implicitly
  Rational(long num, long den);
  explicit Rational(const mpz_class& num, const mpz_class& den = 1);

  // Parses the text form `p/q` (q omitted when 1), e.g. "-1/2", "3".
  // Throws std::invalid_argument on malformed input and
  // std::domain_error on a zero denominator.
  static Rational from_string(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs); // throws std::domain_error on /0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  // Raises to an integer power; negative exponents invert (throws
  // std::domain_error when the base is zero).
  Rational pow(long exponent) const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c <=> 0;
  }

  std::string str() const { return value_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class value_; // canonical at all times
};

// alpha(alpha-1)...(alpha-k+1); the empty product (k = 0) is 1.
Rational falling_factorial(const Rational& alpha, unsigned k);

Rational factorial(unsigned n);

} // namespace pertex

#endif
