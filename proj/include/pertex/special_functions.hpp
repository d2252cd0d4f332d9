#ifndef PERTEX_SPECIAL_FUNCTIONS_HPP
#define PERTEX_SPECIAL_FUNCTIONS_HPP

#include <vector>

#include "pertex/expansion.hpp"
#include "pertex/polynomial.hpp"
#include "pertex/rational.hpp"

namespace pertex {

// Legendre polynomial P_n(u), read off the generating function
// (1 - 2ux + x^2)^(-1/2) = sum_n P_n(u) x^n.
Polynomial legendre(int n);

// Probabilists' Hermite polynomial He_n(u), from e^(ux - x^2/2); note this
// is NOT the physicists' family generated by e^(2ux - x^2).
Polynomial hermite(int n);

// Bernoulli number B_n in the convention where x/(e^x - 1) =
// 1 + B_1 x + (B_2/2!) x^2 + ..., so B_1 = -1/2.
Rational bernoulli(int n);

// Power series of sec(x) = 1/cos(x) through x^order; coefficients are
// constant polynomials, odd orders vanish.
SeriesExpansion sec_series(int order);

// Per-order angular coefficients of the potential of charges +Q and -Q at
// distance Delta either side of the origin, in units of Q/r with expansion
// parameter Delta/r and u standing for cos(theta). Entry k is the order
// n = k+1 coefficient: 2*P_n(u) for odd n, exactly zero for even n.
std::vector<Polynomial> multipole_potential(int order);

// Series of the Lorentz factor (1 - beta^2)^(-1/2); a_{2k} multiplies
// beta^(2k), odd coefficients vanish.
SeriesExpansion lorentz_gamma(int order);

} // namespace pertex

#endif
