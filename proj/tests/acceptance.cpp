// Acceptance suite: one check per shipped guarantee, each printed as its own
// pass/fail line. Every comparison is exact; there are no tolerances anywhere.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pertex/cli.hpp"
#include "pertex/expansion.hpp"
#include "pertex/expansion_spec.hpp"
#include "pertex/partitions.hpp"
#include "pertex/special_functions.hpp"

using namespace pertex;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

template <typename T>
void require_equal(const T& actual, const T& expected, const std::string& label) {
  if (!(actual == expected)) throw Failure(label);
}

Rational random_rational(std::mt19937& rng, int num_lo, int num_hi, int den_hi) {
  std::uniform_int_distribution<int> num(num_lo, num_hi);
  std::uniform_int_distribution<int> den(1, den_hi);
  return Rational(num(rng), den(rng));
}

const Polynomial u = Polynomial::variable();

const std::vector<Rational> kAlphas{Rational(-1, 2), Rational(-1), Rational(2), Rational(5, 3)};

// ---- criteria ------------------------------------------------------------

void criterion_low_order_formulas() {
  const Rational c1(2), c2(3), c3(5), c4(7);
  const Perturbation pert({{1, Polynomial(c1)}, {2, Polynomial(c2)}, {3, Polynomial(c3)},
                           {4, Polynomial(c4)}});
  for (const Rational& alpha : kAlphas) {
    const DerivativeSequence d = DerivativeSequence::power(alpha);
    const SeriesExpansion series = expand(d, pert, 4);
    const Rational d1 = falling_factorial(alpha, 1);
    const Rational d2 = falling_factorial(alpha, 2);
    const Rational d3 = falling_factorial(alpha, 3);
    const Rational d4 = falling_factorial(alpha, 4);
    require_equal(series.coefficient(1), Polynomial(d1 * c1), "a1 != d1 c1");
    require_equal(series.coefficient(2), Polynomial(d1 * c2 + d2 / Rational(2) * c1.pow(2)),
                  "a2 != d1 c2 + d2 c1^2 / 2!");
    require_equal(series.coefficient(3),
                  Polynomial(d1 * c3 + d2 * c2 * c1 + d3 / factorial(3) * c1.pow(3)),
                  "a3 != d1 c3 + d2 c2 c1 + d3 c1^3 / 3!");
    require_equal(series.coefficient(4),
                  Polynomial(d1 * c4 + d2 * c3 * c1 + d2 / Rational(2) * c2.pow(2) +
                             d3 / Rational(2) * c2 * c1.pow(2) + d4 / factorial(4) * c1.pow(4)),
                  "a4 formula mismatch");

    // the five partitions of 4 carry multiplicity weights 1, 1, 1/2!, 1/2!, 1/4!
    const Perturbation ones({{1, Polynomial(Rational(1))}, {2, Polynomial(Rational(1))},
                             {3, Polynomial(Rational(1))}, {4, Polynomial(Rational(1))}});
    const std::vector<std::pair<Partition, Rational>> weighted{
        {Partition({4}), Rational(1)},
        {Partition({3, 1}), Rational(1)},
        {Partition({2, 2}), Rational(1, 2)},
        {Partition({2, 1, 1}), Rational(1, 2)},
        {Partition({1, 1, 1, 1}), Rational(1, 24)}};
    for (const auto& [partition, weight] : weighted) {
      const Rational d_k = falling_factorial(alpha, static_cast<unsigned>(partition.count()));
      require_equal(monomial_coefficient(partition, d, ones), Polynomial(d_k * weight),
                    "weight mismatch on " + partition.str());
    }
  }
}

void criterion_legendre() {
  require_equal(legendre(1), u, "P1");
  require_equal(legendre(2), Polynomial::monomial(Rational(3, 2), 2) - Polynomial(Rational(1, 2)),
                "P2");
  require_equal(legendre(3),
                Polynomial::monomial(Rational(5, 2), 3) - Polynomial::monomial(Rational(3, 2), 1),
                "P3");
  Polynomial prev(1);
  Polynomial current = u;
  for (int n = 1; n <= 9; ++n) {
    Polynomial next = (u * current * Rational(2 * n + 1) - prev * Rational(n)) *
                      (Rational(1) / Rational(n + 1));
    prev = current;
    current = next;
    require_equal(legendre(n + 1), current, "Bonnet recurrence at n = " + std::to_string(n + 1));
  }
  for (int n = 0; n <= 10; ++n)
    require_equal(legendre(n).evaluate(Rational(1)), Rational(1),
                  "P_n(1) != 1 at n = " + std::to_string(n));
}

void criterion_multipole() {
  const std::vector<Polynomial> v = multipole_potential(6);
  for (int n = 2; n <= 6; n += 2)
    require(v[static_cast<std::size_t>(n) - 1].is_zero(),
            "even order " + std::to_string(n) + " did not cancel");
  require_equal(v[0], Polynomial::monomial(Rational(2), 1), "dipole term != 2u");
  require_equal(v[2],
                Polynomial::monomial(Rational(5), 3) - Polynomial::monomial(Rational(3), 1),
                "octupole term != -3u + 5u^3");
}

void criterion_hermite() {
  require_equal(hermite(0), Polynomial(1), "He0");
  require_equal(hermite(1), u, "He1");
  require_equal(hermite(2), u.pow(2) - Polynomial(1), "He2");
  require_equal(hermite(3), u.pow(3) - u * Rational(3), "He3");
  Polynomial prev(1);
  Polynomial current = u;
  for (int n = 1; n <= 9; ++n) {
    Polynomial next = u * current - prev * Rational(n);
    prev = current;
    current = next;
    require_equal(hermite(n + 1), current,
                  "Hermite recurrence at n = " + std::to_string(n + 1));
  }
}

SeriesExpansion bernoulli_oracle_series(int n) {
  std::vector<std::pair<int, Polynomial>> terms;
  for (int i = 1; i <= n; ++i)
    terms.emplace_back(i, Polynomial(Rational(1) / factorial(static_cast<unsigned>(i) + 1)));
  return oracle_expand(DerivativeSequence::power(Rational(-1)), Perturbation(terms), n);
}

void criterion_bernoulli() {
  require_equal(bernoulli(1), Rational(-1, 2), "B1");
  require_equal(bernoulli(2), Rational(1, 6), "B2");
  require_equal(bernoulli(3), Rational(0), "B3");
  require_equal(bernoulli(4), Rational(-1, 30), "B4");
  require_equal(bernoulli_oracle_series(4).coefficient(4).constant_value() * factorial(4),
                Rational(-1, 30), "B4 via direct composition");
  for (int k = 1; k <= 5; ++k) {
    const int n = 2 * k + 1;
    require_equal(bernoulli(n), Rational(0), "B" + std::to_string(n) + " != 0");
    require(bernoulli_oracle_series(n).coefficient(n).is_zero(),
            "B" + std::to_string(n) + " != 0 via direct composition");
  }
}

void criterion_secant() {
  const SeriesExpansion series = sec_series(12);

  std::vector<std::pair<int, Polynomial>> terms;
  std::vector<Rational> cosine(13, Rational(0));
  cosine[0] = Rational(1);
  for (int k = 1; 2 * k <= 12; ++k) {
    Rational c = Rational(1) / factorial(static_cast<unsigned>(2 * k));
    if (k % 2 == 1) c = -c;
    terms.emplace_back(2 * k, Polynomial(c));
    cosine[static_cast<std::size_t>(2 * k)] = c;
  }
  require_equal(series,
                oracle_expand(DerivativeSequence::power(Rational(-1)), Perturbation(terms), 12),
                "sec series differs between the two routes");

  // sec * cos == 1 through x^12
  for (int n = 0; n <= 12; ++n) {
    Rational convolution(0);
    for (int j = 0; j <= n; ++j)
      convolution += series.coefficient(j).constant_value() *
                     cosine[static_cast<std::size_t>(n - j)];
    require_equal(convolution, Rational(n == 0 ? 1 : 0),
                  "sec * cos != 1 at order " + std::to_string(n));
  }
}

void criterion_partitions() {
  const std::vector<std::vector<int>> six{
      {6},       {5, 1},       {4, 2},    {4, 1, 1},    {3, 3},          {3, 2, 1},
      {3, 1, 1, 1}, {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
  const std::vector<Partition> got_six = enumerate_partitions(6);
  require(got_six.size() == six.size(), "n=6 count");
  for (std::size_t i = 0; i < six.size(); ++i)
    require(got_six[i].parts() == six[i], "n=6 order at row " + std::to_string(i));

  const std::vector<std::vector<int>> eight{
      {8},          {7, 1},          {6, 2},       {6, 1, 1},          {5, 3},
      {5, 2, 1},    {5, 1, 1, 1},    {4, 4},       {4, 3, 1},          {4, 2, 2},
      {4, 2, 1, 1}, {4, 1, 1, 1, 1}, {3, 3, 2},    {3, 3, 1, 1},       {3, 2, 2, 1},
      {3, 2, 1, 1, 1}, {3, 1, 1, 1, 1, 1}, {2, 2, 2, 2}, {2, 2, 2, 1, 1},
      {2, 2, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1}};
  const std::vector<Partition> got_eight = enumerate_partitions(8);
  require(got_eight.size() == 22, "n=8 count");
  for (std::size_t i = 0; i < eight.size(); ++i)
    require(got_eight[i].parts() == eight[i], "n=8 order at row " + std::to_string(i));

  const std::vector<std::uint64_t> classical{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    require_equal(count_partitions(n), classical[static_cast<std::size_t>(n)],
                  "p(" + std::to_string(n) + ")");
    require_equal(count_restricted(n, {1, 2}), static_cast<std::uint64_t>(n / 2 + 1),
                  "two-part count at n = " + std::to_string(n));
  }
}

void criterion_oracle_equivalence() {
  std::mt19937 rng(601);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational alpha = random_rational(rng, -3, 3, 3);
    std::vector<std::pair<int, Polynomial>> terms;
    for (int degree = 1; degree <= 4; ++degree) {
      if (std::uniform_int_distribution<int>(0, 2)(rng) != 0)
        terms.emplace_back(degree, Polynomial(random_rational(rng, -3, 3, 3)));
    }
    const Perturbation pert(terms);
    const DerivativeSequence d = DerivativeSequence::power(alpha);
    require_equal(expand(d, pert, 10), oracle_expand(d, pert, 10),
                  "trial " + std::to_string(trial) + " with alpha = " + alpha.str());
  }

  const DerivativeSequence inv_sqrt = DerivativeSequence::power(Rational(-1, 2));
  const DerivativeSequence reciprocal = DerivativeSequence::power(Rational(-1));
  const Perturbation legendre_pert(
      {{1, Polynomial::monomial(Rational(-2), 1)}, {2, Polynomial(Rational(1))}});
  require_equal(expand(inv_sqrt, legendre_pert, 10), oracle_expand(inv_sqrt, legendre_pert, 10),
                "Legendre configuration");

  const Perturbation hermite_pert({{1, u}, {2, Polynomial(Rational(-1, 2))}});
  require_equal(expand(DerivativeSequence::exp_shifted(), hermite_pert, 10),
                oracle_expand(DerivativeSequence::exp_shifted(), hermite_pert, 10),
                "Hermite configuration");

  std::vector<std::pair<int, Polynomial>> bernoulli_terms;
  for (int i = 1; i <= 10; ++i)
    bernoulli_terms.emplace_back(
        i, Polynomial(Rational(1) / factorial(static_cast<unsigned>(i) + 1)));
  const Perturbation bernoulli_pert(bernoulli_terms);
  require_equal(expand(reciprocal, bernoulli_pert, 10),
                oracle_expand(reciprocal, bernoulli_pert, 10), "Bernoulli configuration");

  std::vector<std::pair<int, Polynomial>> sec_terms;
  for (int k = 1; 2 * k <= 12; ++k) {
    Rational c = Rational(1) / factorial(static_cast<unsigned>(2 * k));
    sec_terms.emplace_back(2 * k, Polynomial(k % 2 == 1 ? -c : c));
  }
  const Perturbation sec_pert(sec_terms);
  require_equal(expand(reciprocal, sec_pert, 12), oracle_expand(reciprocal, sec_pert, 12),
                "secant configuration");
}

void criterion_closed_forms() {
  std::mt19937 rng(701);
  for (int trial = 0; trial < 30; ++trial) {
    const bool polynomial_coeffs = trial % 2 == 0;
    auto coefficient = [&] {
      if (!polynomial_coeffs) return Polynomial(random_rational(rng, -3, 3, 3));
      return Polynomial(random_rational(rng, -3, 3, 3)) +
             Polynomial::monomial(random_rational(rng, -3, 3, 3), 1);
    };
    const Polynomial c1 = coefficient();
    const Polynomial c2 = coefficient();
    const DerivativeSequence d =
        trial % 5 == 0 ? DerivativeSequence::exp_shifted()
                       : DerivativeSequence::power(random_rational(rng, -3, 3, 3));
    const SeriesExpansion series = expand(d, Perturbation({{1, c1}, {2, c2}}), 10);
    for (int n = 1; 2 * n <= 10; ++n) {
      require_equal(two_component_even(n, d, c1, c2), series.coefficient(2 * n),
                    "even closed form at 2n = " + std::to_string(2 * n));
      require_equal(two_component_odd(n, d, c1, c2), series.coefficient(2 * n - 1),
                    "odd closed form at 2n-1 = " + std::to_string(2 * n - 1));
    }
  }
}

void criterion_gamma_erratum() {
  const Perturbation pert({{2, Polynomial(Rational(-1))}});
  const DerivativeSequence d = DerivativeSequence::power(Rational(-1, 2));
  require_equal(lorentz_gamma(4).coefficient(4), Polynomial(Rational(3, 8)),
                "beta^4 coefficient via partitions");
  require_equal(oracle_expand(d, pert, 4).coefficient(4), Polynomial(Rational(3, 8)),
                "beta^4 coefficient via direct composition");
}

void criterion_cli() {
  auto invoke = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    require(code == 0, "CLI exited with " + std::to_string(code) + ": " + err.str());
    return out.str();
  };
  require_equal(invoke({"legendre", "2"}), std::string("3/2*u^2 - 1/2\n"), "legendre 2");
  require_equal(invoke({"partitions", "2"}), std::string("[2]\n[1,1]\n"), "partitions 2");
  require_equal(invoke({"bernoulli", "4"}), std::string("-1/30\n"), "bernoulli 4");

  std::mt19937 rng(811);
  for (int trial = 0; trial < 100; ++trial) {
    ExpansionSpec spec;
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0:
        spec.family = ExpansionSpec::Family::Power;
        spec.alpha = random_rational(rng, -5, 5, 4);
        break;
      case 1:
        spec.family = ExpansionSpec::Family::Exp;
        break;
      default:
        spec.family = ExpansionSpec::Family::Explicit;
        for (int k = std::uniform_int_distribution<int>(0, 4)(rng); k > 0; --k)
          spec.derivatives.push_back(random_rational(rng, -3, 3, 3));
        break;
    }
    for (int degree = 1; degree <= 5; ++degree) {
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) continue;
      Polynomial c = Polynomial(random_rational(rng, -3, 3, 3)) +
                     Polynomial::monomial(random_rational(rng, -3, 3, 3), 1);
      spec.terms.emplace_back(degree, c);
    }
    spec.order = (spec.terms.empty() ? 0 : spec.terms.back().first) +
                 std::uniform_int_distribution<int>(0, 2)(rng);
    require(parse_spec(render_spec(spec)) == spec,
            "round trip failed for: " + render_spec(spec));
  }
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"1. order 1..4 coefficients match the closed formulas for alpha in {-1/2,-1,2,5/3}",
       criterion_low_order_formulas},
      {"2. Legendre P1..P3 exact, Bonnet recurrence to n=10, P_n(1)=1",
       criterion_legendre},
      {"3. multipole potential: even orders vanish, odd orders are 2u and 5u^3-3u",
       criterion_multipole},
      {"4. Hermite He_0..He_3 exact, three-term recurrence to n=10", criterion_hermite},
      {"5. Bernoulli B1,B2,B3,B4 exact and odd B vanish by both routes",
       criterion_bernoulli},
      {"6. secant series times cosine series is 1 through order 12, both routes agree",
       criterion_secant},
      {"7. partition enumeration order, counts 0..12, two-part counts",
       criterion_partitions},
      {"8. partition route equals direct composition on 50 random instances and all "
       "application setups",
       criterion_oracle_equivalence},
      {"9. two-component closed forms equal the engine through order 10",
       criterion_closed_forms},
      {"10. Lorentz gamma beta^4 coefficient is 3/8 by both routes",
       criterion_gamma_erratum},
      {"11. CLI byte-exact outputs and spec round-trip", criterion_cli},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    try {
      check();
      std::cout << "[PASS] " << name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] " << name << " -- " << e.what() << "\n";
    }
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
