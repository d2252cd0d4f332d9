#ifndef PERTEX_POLYNOMIAL_HPP
#define PERTEX_POLYNOMIAL_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pertex/rational.hpp"

namespace pertex {

// Dense univariate polynomial over Rational in the auxiliary symbol u.
// Canonical form: the highest stored coefficient is nonzero; the zero
// polynomial stores no coefficients at all.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& constant); // NOLINT: constants embed implicitly
  Polynomial(long constant) : Polynomial(Rational(constant)) {}
  explicit Polynomial(std::vector<Rational> coefficients); // index = degree

  static Polynomial monomial(const Rational& coefficient, int degree);
  static Polynomial variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return coefficients_.size() <= 1; }

  // Coefficient of u^k; zero outside the stored range.
  const Rational& coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  // The value of a constant polynomial; throws std::domain_error otherwise.
  Rational constant_value() const;

  Rational evaluate(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scale);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }

  Polynomial pow(unsigned exponent) const;

  bool operator==(const Polynomial&) const = default;

  // Canonical text form, highest degree first: `5/2*u^3 - 3/2*u`, `u^2 - 1`,
  // `-1/2`, `0`. Unit coefficients and `^1` are omitted.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
  void trim();

  std::vector<Rational> coefficients_;
};

// Parses a sum of terms `c`, `c*u^k`, `u^k`, `-2u` (the `*` is optional);
// whitespace between lexemes is ignored. Inverse of Polynomial::str().
// Throws std::invalid_argument (or std::domain_error for a zero
// denominator) with the offset of the offending character.
Polynomial parse_polynomial(std::string_view text);

} // namespace pertex

#endif
