#ifndef PERTEX_EXPANSION_HPP
#define PERTEX_EXPANSION_HPP

#include <map>
#include <variant>
#include <vector>

#include "pertex/partitions.hpp"
#include "pertex/polynomial.hpp"
#include "pertex/rational.hpp"

namespace pertex {

// Supplier of the outer-function derivatives d_k = f^(k)(1); d_0 = f(1).
class DerivativeSequence {
public:
  // f(w) = w^alpha: d_k = alpha(alpha-1)...(alpha-k+1), d_0 = 1.
  static DerivativeSequence power(const Rational& alpha);
  // f(w) = e^(w-1): d_k = 1 for every k.
  static DerivativeSequence exp_shifted();
  // Stored values d_1..d_m plus d_0 = f(1), which defaults to 1.
  static DerivativeSequence explicit_values(std::vector<Rational> derivatives,
                                            const Rational& base = Rational(1));

  Rational base_value() const; // d_0
  // d_k for k >= 0. Throws std::out_of_range naming the missing k when an
  // explicit sequence is too short.
  Rational derivative(int k) const;
  // d_0..d_max_k in one pass (O(1) per step for the power family).
  std::vector<Rational> table(int max_k) const;

private:
  struct Power {
    Rational alpha;
  };
  struct ExpShifted {};
  struct Explicit {
    std::vector<Rational> values;
    Rational base;
  };

  explicit DerivativeSequence(std::variant<Power, ExpShifted, Explicit> family)
      : family_(std::move(family)) {}

  std::variant<Power, ExpShifted, Explicit> family_;
};

// The series u(x) = sum_i c_i x^i added to 1 inside the outer function.
// Coefficients are polynomials in the auxiliary symbol u; plain rationals
// embed as constants. Zero coefficients are not stored.
class Perturbation {
public:
  Perturbation() = default; // empty perturbation
  explicit Perturbation(std::vector<std::pair<int, Polynomial>> terms);

  const std::map<int, Polynomial>& terms() const { return terms_; }
  std::vector<int> support() const; // degrees with nonzero coefficient, ascending
  bool empty() const { return terms_.empty(); }
  int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

  // Coefficient of x^degree; the zero polynomial when absent.
  const Polynomial& coefficient(int degree) const;

  // Copy with every term of degree > max_degree dropped. Terms beyond the
  // expansion order cannot contribute, so this loses nothing.
  Perturbation truncated(int max_degree) const;

  bool operator==(const Perturbation&) const = default;

private:
  std::map<int, Polynomial> terms_;
};

// Truncated power series f(1 + u(x)) = a_0 + a_1 x + ... + a_N x^N with
// exact polynomial coefficients.
class SeriesExpansion {
public:
  SeriesExpansion(int order, std::vector<Polynomial> coefficients);

  int order() const { return order_; }
  const Polynomial& coefficient(int n) const; // throws std::out_of_range past N
  const std::vector<Polynomial>& coefficients() const { return coefficients_; }

  SeriesExpansion truncated(int new_order) const;

  bool operator==(const SeriesExpansion&) const = default;

private:
  int order_;
  std::vector<Polynomial> coefficients_;
};

// One partition-indexed term of the order-n coefficient:
//   d_K * prod_q c_q^(m_q) / prod_q m_q!
// where m_q is the multiplicity of part q and K the total part count.
// Every part must lie in the perturbation's support.
Polynomial monomial_coefficient(const Partition& partition, const DerivativeSequence& d,
                                const Perturbation& pert);

// Expansion coefficients via partition enumeration: a_n sums
// monomial_coefficient over the partitions of n restricted to the support.
// The perturbation may not contain terms of degree > order.
SeriesExpansion expand(const DerivativeSequence& d, const Perturbation& pert, int order);

// Independent check route: composes the truncated series directly,
//   sum_k d_k/k! * u(x)^k,
// with no partition machinery. Same contract as expand().
SeriesExpansion oracle_expand(const DerivativeSequence& d, const Perturbation& pert, int order);

// Closed forms for a two-component perturbation c_1 x + c_2 x^2:
//   A_{2n}   = sum_{i=0}^{n} d_{n+i} c_2^(n-i) c_1^(2i) / ((n-i)!(2i)!)
//   A_{2n-1} = sum_{i=1}^{n} d_{n+i-1} c_2^(n-i) c_1^(2i-1) / ((n-i)!(2i-1)!)
// two_component_even(n) returns A_{2n}; two_component_odd(n) returns A_{2n-1}.
Polynomial two_component_even(int n, const DerivativeSequence& d, const Polynomial& c1,
                              const Polynomial& c2);
Polynomial two_component_odd(int n, const DerivativeSequence& d, const Polynomial& c1,
                             const Polynomial& c2);

} // namespace pertex

#endif
