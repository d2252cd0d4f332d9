#include "pertex/special_functions.hpp"

#include <stdexcept>

namespace pertex {

namespace {

// Generating-function setup (1 + c1 x + c2 x^2)^(-1/2) with c1 = -2u
// (or +2u for the mirrored charge) and c2 = 1. Truncating the fixed
// perturbation to the requested order is exact: a term of degree i never
// contributes below x^i.
SeriesExpansion legendre_series(int order, bool mirrored) {
  const Polynomial c1 = Polynomial::monomial(Rational(mirrored ? 2 : -2), 1);
  const Perturbation pert({{1, c1}, {2, Polynomial(Rational(1))}});
  return expand(DerivativeSequence::power(Rational(-1, 2)), pert.truncated(order), order);
}

} // namespace

Polynomial legendre(int n) {
  if (n < 0) throw std::domain_error("Legendre index must be non-negative");
  return legendre_series(n, false).coefficient(n);
}

Polynomial hermite(int n) {
  if (n < 0) throw std::domain_error("Hermite index must be non-negative");
  const Perturbation pert({{1, Polynomial::variable()}, {2, Polynomial(Rational(-1, 2))}});
  const SeriesExpansion series =
      expand(DerivativeSequence::exp_shifted(), pert.truncated(n), n);
  return series.coefficient(n) * factorial(static_cast<unsigned>(n));
}

Rational bernoulli(int n) {
  if (n < 0) throw std::domain_error("Bernoulli index must be non-negative");
  // x/(e^x - 1) = (1 + x/2! + x^2/3! + ...)^(-1)
  std::vector<std::pair<int, Polynomial>> terms;
  for (int i = 1; i <= n; ++i)
    terms.emplace_back(i, Polynomial(Rational(1) / factorial(static_cast<unsigned>(i) + 1)));
  const SeriesExpansion series =
      expand(DerivativeSequence::power(Rational(-1)), Perturbation(std::move(terms)), n);
  return series.coefficient(n).constant_value() * factorial(static_cast<unsigned>(n));
}

SeriesExpansion sec_series(int order) {
  if (order < 0) throw std::domain_error("expansion order must be non-negative");
  // sec(x) = (1 + [-x^2/2! + x^4/4! - ...])^(-1)
  std::vector<std::pair<int, Polynomial>> terms;
  for (int k = 1; 2 * k <= order; ++k) {
    Rational c = Rational(1) / factorial(static_cast<unsigned>(2 * k));
    if (k % 2 == 1) c = -c;
    terms.emplace_back(2 * k, Polynomial(c));
  }
  return expand(DerivativeSequence::power(Rational(-1)), Perturbation(std::move(terms)), order);
}

std::vector<Polynomial> multipole_potential(int order) {
  if (order < 1) throw std::domain_error("multipole expansion needs order >= 1");
  const SeriesExpansion near = legendre_series(order, false);  // charge on the +z side
  const SeriesExpansion far = legendre_series(order, true);    // mirrored charge
  std::vector<Polynomial> result;
  result.reserve(static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n)
    result.push_back(near.coefficient(n) - far.coefficient(n));
  return result;
}

SeriesExpansion lorentz_gamma(int order) {
  if (order < 0) throw std::domain_error("expansion order must be non-negative");
  const Perturbation pert({{2, Polynomial(Rational(-1))}});
  return expand(DerivativeSequence::power(Rational(-1, 2)), pert.truncated(order), order);
}

} // namespace pertex
