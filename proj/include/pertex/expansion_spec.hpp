#ifndef PERTEX_EXPANSION_SPEC_HPP
#define PERTEX_EXPANSION_SPEC_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pertex/expansion.hpp"
#include "pertex/polynomial.hpp"
#include "pertex/rational.hpp"

namespace pertex {

// Parsed form of the flat key=value expansion language, e.g.
//   family=power(-1/2) c1=-2u c2=1 order=3
struct ExpansionSpec {
  enum class Family { Power, Exp, Explicit };

  Family family = Family::Power;
  Rational alpha;                     // Family::Power only
  std::vector<Rational> derivatives;  // Family::Explicit: d_1..d_m
  std::vector<std::pair<int, Polynomial>> terms; // ascending by degree
  int order = 0;

  DerivativeSequence derivative_sequence() const;
  Perturbation perturbation() const;

  bool operator==(const ExpansionSpec&) const = default;
};

// Parse failure with the 1-based position and the offending token.
class SpecParseError : public std::runtime_error {
public:
  SpecParseError(int line, int column, std::string token, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& token() const { return token_; }

private:
  int line_;
  int column_;
  std::string token_;
};

ExpansionSpec parse_spec(std::string_view text);

// Single-line canonical rendering; parse_spec(render_spec(s)) == s for any
// spec with ascending, duplicate-free terms.
std::string render_spec(const ExpansionSpec& spec);

} // namespace pertex

#endif
