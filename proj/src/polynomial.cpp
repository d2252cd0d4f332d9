#include "pertex/polynomial.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace pertex {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coefficients_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(const Rational& coefficient, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
  Polynomial p;
  if (!coefficient.is_zero()) {
    p.coefficients_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.coefficients_.back() = coefficient;
  }
  return p;
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

const Rational& Polynomial::coefficient(int k) const {
  // init-on-first-use so the accessor stays safe during static initialization
  static const Rational zero(0);
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return zero;
  return coefficients_[static_cast<std::size_t>(k)];
}

Rational Polynomial::constant_value() const {
  if (coefficients_.size() > 1)
    throw std::domain_error("polynomial '" + str() + "' is not constant");
  return coefficients_.empty() ? Rational(0) : coefficients_[0];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational result(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result *= x;
    result += *it;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coefficients_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coefficients_.size() < rhs.coefficients_.size())
    coefficients_.resize(rhs.coefficients_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i)
    coefficients_[i] += rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coefficients_.size() < rhs.coefficients_.size())
    coefficients_.resize(rhs.coefficients_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i)
    coefficients_[i] -= rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> product(coefficients_.size() + rhs.coefficients_.size() - 1,
                                Rational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
      product[i + j] += coefficients_[i] * rhs.coefficients_[j];
  }
  coefficients_ = std::move(product);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  for (auto& c : coefficients_) c *= scale;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

void append_term(std::string& out, const Rational& coeff, int degree, bool leading) {
  Rational c = coeff;
  if (!leading) {
    out += c.sign() < 0 ? " - " : " + ";
    if (c.sign() < 0) c = -c;
  }
  if (degree == 0) {
    out += c.str();
    return;
  }
  if (c == Rational(-1)) {
    out += '-'; // only reachable for the leading term
  } else if (c != Rational(1)) {
    out += c.str();
    out += '*';
  }
  out += 'u';
  if (degree != 1) {
    out += '^';
    out += std::to_string(degree);
  }
}

} // namespace

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coefficient(k);
    if (c.is_zero()) continue;
    append_term(out, c, k, leading);
    leading = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace {

// Hand-rolled scanner for the polynomial literal grammar. Kept free of any
// lookahead beyond one character so error offsets are precise.
class PolyScanner {
public:
  explicit PolyScanner(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (eof()) fail("empty polynomial");
    Polynomial result;
    bool leading = true;
    while (true) {
      int sign = 1;
      if (leading) {
        if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
      } else {
        if (peek() == '+' || peek() == '-')
          sign = take() == '-' ? -1 : 1;
        else
          fail("expected '+' or '-'");
      }
      skip_ws();
      result += term(sign);
      skip_ws();
      if (eof()) return result;
      leading = false;
    }
  }

private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial literal '" + std::string(text_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational number() {
    mpz_class num(digits());
    if (!eof() && peek() == '/') {
      ++pos_;
      mpz_class den(digits());
      if (den == 0)
        throw std::domain_error("polynomial literal '" + std::string(text_) +
                                "': zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  int exponent() {
    std::string d = digits();
    if (d.size() > 4) fail("exponent too large");
    return std::stoi(d);
  }

  Polynomial term(int sign) {
    Rational coeff(sign);
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= number();
      saw_number = true;
    }
    skip_ws();
    bool starred = false;
    if (saw_number && peek() == '*') {
      ++pos_;
      skip_ws();
      starred = true;
    }
    int degree = 0;
    if (peek() == 'u') {
      ++pos_;
      if (!eof() && peek() == '^') {
        ++pos_;
        degree = exponent();
      } else {
        degree = 1;
      }
    } else {
      if (starred) fail("expected 'u'");
      if (!saw_number) fail("expected term");
    }
    return Polynomial::monomial(coeff, degree);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyScanner(text).parse(); }

} // namespace pertex
