#include "pertex/expansion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace pertex {

DerivativeSequence DerivativeSequence::power(const Rational& alpha) {
  return DerivativeSequence(Power{alpha});
}

DerivativeSequence DerivativeSequence::exp_shifted() {
  return DerivativeSequence(ExpShifted{});
}

DerivativeSequence DerivativeSequence::explicit_values(std::vector<Rational> derivatives,
                                                       const Rational& base) {
  return DerivativeSequence(Explicit{std::move(derivatives), base});
}

Rational DerivativeSequence::base_value() const {
  if (const auto* e = std::get_if<Explicit>(&family_)) return e->base;
  return Rational(1);
}

namespace {

[[noreturn]] void missing_derivative(int k) {
  throw std::out_of_range("explicit derivative sequence has no d_" + std::to_string(k));
}

} // namespace

Rational DerivativeSequence::derivative(int k) const {
  if (k < 0) throw std::domain_error("derivative index must be non-negative");
  if (k == 0) return base_value();
  if (const auto* p = std::get_if<Power>(&family_))
    return falling_factorial(p->alpha, static_cast<unsigned>(k));
  if (std::holds_alternative<ExpShifted>(family_)) return Rational(1);
  const auto& e = std::get<Explicit>(family_);
  if (static_cast<std::size_t>(k) > e.values.size()) missing_derivative(k);
  return e.values[static_cast<std::size_t>(k) - 1];
}

std::vector<Rational> DerivativeSequence::table(int max_k) const {
  if (max_k < 0) throw std::domain_error("derivative index must be non-negative");
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(max_k) + 1);
  values.push_back(base_value());
  if (const auto* p = std::get_if<Power>(&family_)) {
    Rational d(1);
    for (int k = 1; k <= max_k; ++k) {
      d *= p->alpha - Rational(k - 1);
      values.push_back(d);
    }
  } else if (std::holds_alternative<ExpShifted>(family_)) {
    values.assign(static_cast<std::size_t>(max_k) + 1, Rational(1));
    values[0] = base_value();
  } else {
    const auto& e = std::get<Explicit>(family_);
    for (int k = 1; k <= max_k; ++k) {
      if (static_cast<std::size_t>(k) > e.values.size()) missing_derivative(k);
      values.push_back(e.values[static_cast<std::size_t>(k) - 1]);
    }
  }
  return values;
}

Perturbation::Perturbation(std::vector<std::pair<int, Polynomial>> terms) {
  for (auto& [degree, coefficient] : terms) {
    if (degree < 1)
      throw std::invalid_argument("perturbation degree must be >= 1, got " +
                                  std::to_string(degree));
    if (coefficient.is_zero()) continue;
    auto [it, inserted] = terms_.emplace(degree, std::move(coefficient));
    (void)it;
    if (!inserted)
      throw std::invalid_argument("duplicate perturbation degree " + std::to_string(degree));
  }
}

std::vector<int> Perturbation::support() const {
  std::vector<int> degrees;
  degrees.reserve(terms_.size());
  for (const auto& [degree, coefficient] : terms_) degrees.push_back(degree);
  return degrees;
}

const Polynomial& Perturbation::coefficient(int degree) const {
  static const Polynomial zero;
  auto it = terms_.find(degree);
  return it == terms_.end() ? zero : it->second;
}

Perturbation Perturbation::truncated(int max_degree) const {
  Perturbation result;
  for (const auto& [degree, coefficient] : terms_) {
    if (degree <= max_degree) result.terms_.emplace(degree, coefficient);
  }
  return result;
}

SeriesExpansion::SeriesExpansion(int order, std::vector<Polynomial> coefficients)
    : order_(order), coefficients_(std::move(coefficients)) {
  if (order_ < 0) throw std::domain_error("expansion order must be non-negative");
  if (coefficients_.size() != static_cast<std::size_t>(order_) + 1)
    throw std::invalid_argument("series of order N needs exactly N+1 coefficients");
}

const Polynomial& SeriesExpansion::coefficient(int n) const {
  if (n < 0 || n > order_)
    throw std::out_of_range("series has no coefficient a_" + std::to_string(n));
  return coefficients_[static_cast<std::size_t>(n)];
}

SeriesExpansion SeriesExpansion::truncated(int new_order) const {
  if (new_order < 0 || new_order > order_)
    throw std::out_of_range("cannot truncate order " + std::to_string(order_) + " series to " +
                            std::to_string(new_order));
  std::vector<Polynomial> coeffs(coefficients_.begin(),
                                 coefficients_.begin() + new_order + 1);
  return SeriesExpansion(new_order, std::move(coeffs));
}

namespace {

void check_order_and_degree(const Perturbation& pert, int order) {
  if (order < 0) throw std::domain_error("expansion order must be non-negative");
  if (!pert.empty() && pert.max_degree() > order)
    throw std::invalid_argument("perturbation term of degree " +
                                std::to_string(pert.max_degree()) +
                                " exceeds expansion order " + std::to_string(order));
}

} // namespace

Polynomial monomial_coefficient(const Partition& partition, const DerivativeSequence& d,
                                const Perturbation& pert) {
  Rational weight = d.derivative(static_cast<int>(partition.count()));
  Polynomial product(Rational(1));
  for (const auto& [part, multiplicity] : partition.multiplicities()) {
    const Polynomial& c = pert.coefficient(part);
    if (c.is_zero())
      throw std::invalid_argument("partition part " + std::to_string(part) +
                                  " lies outside the perturbation support");
    product *= c.pow(static_cast<unsigned>(multiplicity));
    weight /= factorial(static_cast<unsigned>(multiplicity));
  }
  return product * weight;
}

SeriesExpansion expand(const DerivativeSequence& d, const Perturbation& pert, int order) {
  check_order_and_degree(pert, order);
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = Polynomial(d.base_value());
  if (pert.empty() || order == 0) return SeriesExpansion(order, std::move(coeffs));

  const std::vector<int> support = pert.support();
  const int max_parts = order / pert.min_degree();
  const std::vector<Rational> d_table = d.table(max_parts);

  // c_q^m for every support degree q and every multiplicity that can occur.
  std::map<int, std::vector<Polynomial>> powers;
  for (int q : support) {
    std::vector<Polynomial>& p = powers[q];
    p.push_back(Polynomial(Rational(1)));
    for (int m = 1; m <= order / q; ++m) p.push_back(p.back() * pert.coefficient(q));
  }

  std::vector<Rational> inv_factorial(static_cast<std::size_t>(max_parts) + 1, Rational(1));
  for (int m = 1; m <= max_parts; ++m)
    inv_factorial[static_cast<std::size_t>(m)] =
        inv_factorial[static_cast<std::size_t>(m) - 1] / Rational(m);

  for (int n = 1; n <= order; ++n) {
    Polynomial a_n;
    for (const Partition& partition : enumerate_restricted(n, support)) {
      Rational weight = d_table[partition.count()];
      Polynomial term(Rational(1));
      for (const auto& [part, multiplicity] : partition.multiplicities()) {
        term *= powers[part][static_cast<std::size_t>(multiplicity)];
        weight *= inv_factorial[static_cast<std::size_t>(multiplicity)];
      }
      a_n += term * weight;
    }
    coeffs[static_cast<std::size_t>(n)] = std::move(a_n);
  }
  return SeriesExpansion(order, std::move(coeffs));
}

namespace {

// Product of two series truncated at `order`, coefficients indexed by the
// power of x.
std::vector<Polynomial> multiply_truncated(const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b, int order) {
  std::vector<Polynomial> product(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[static_cast<std::size_t>(j)].is_zero()) continue;
      product[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return product;
}

} // namespace

SeriesExpansion oracle_expand(const DerivativeSequence& d, const Perturbation& pert, int order) {
  check_order_and_degree(pert, order);
  std::vector<Polynomial> acc(static_cast<std::size_t>(order) + 1);
  acc[0] = Polynomial(d.base_value());
  if (pert.empty() || order == 0) return SeriesExpansion(order, std::move(acc));

  std::vector<Polynomial> u(static_cast<std::size_t>(order) + 1);
  for (const auto& [degree, coefficient] : pert.terms())
    u[static_cast<std::size_t>(degree)] = coefficient;

  const int max_k = order / pert.min_degree();
  const std::vector<Rational> d_table = d.table(max_k);

  std::vector<Polynomial> u_power(static_cast<std::size_t>(order) + 1);
  u_power[0] = Polynomial(Rational(1));
  Rational inv_k_factorial(1);
  for (int k = 1; k <= max_k; ++k) {
    u_power = multiply_truncated(u_power, u, order);
    inv_k_factorial /= Rational(k);
    const Rational weight = d_table[static_cast<std::size_t>(k)] * inv_k_factorial;
    for (int i = k; i <= order; ++i)
      acc[static_cast<std::size_t>(i)] += u_power[static_cast<std::size_t>(i)] * weight;
  }
  return SeriesExpansion(order, std::move(acc));
}

namespace {

std::vector<Polynomial> power_table(const Polynomial& base, int max_exponent) {
  std::vector<Polynomial> table;
  table.push_back(Polynomial(Rational(1)));
  for (int e = 1; e <= max_exponent; ++e) table.push_back(table.back() * base);
  return table;
}

} // namespace

Polynomial two_component_even(int n, const DerivativeSequence& d, const Polynomial& c1,
                              const Polynomial& c2) {
  if (n < 1) throw std::domain_error("two_component_even needs n >= 1");
  const std::vector<Rational> d_table = d.table(2 * n);
  const std::vector<Polynomial> c1_pow = power_table(c1, 2 * n);
  const std::vector<Polynomial> c2_pow = power_table(c2, n);
  Polynomial a;
  for (int i = 0; i <= n; ++i) {
    const Rational weight = d_table[static_cast<std::size_t>(n + i)] /
                            (factorial(static_cast<unsigned>(n - i)) *
                             factorial(static_cast<unsigned>(2 * i)));
    a += c2_pow[static_cast<std::size_t>(n - i)] * c1_pow[static_cast<std::size_t>(2 * i)] *
         weight;
  }
  return a;
}

Polynomial two_component_odd(int n, const DerivativeSequence& d, const Polynomial& c1,
                             const Polynomial& c2) {
  if (n < 1) throw std::domain_error("two_component_odd needs n >= 1");
  const std::vector<Rational> d_table = d.table(2 * n - 1);
  const std::vector<Polynomial> c1_pow = power_table(c1, 2 * n - 1);
  const std::vector<Polynomial> c2_pow = power_table(c2, n - 1);
  Polynomial a;
  for (int i = 1; i <= n; ++i) {
    const Rational weight = d_table[static_cast<std::size_t>(n + i - 1)] /
                            (factorial(static_cast<unsigned>(n - i)) *
                             factorial(static_cast<unsigned>(2 * i - 1)));
    a += c2_pow[static_cast<std::size_t>(n - i)] * c1_pow[static_cast<std::size_t>(2 * i - 1)] *
         weight;
  }
  return a;
}

} // namespace pertex
