#include "pertex/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "pertex/expansion.hpp"
#include "pertex/expansion_spec.hpp"
#include "pertex/partitions.hpp"
#include "pertex/special_functions.hpp"

namespace pertex {

namespace {

using nlohmann::json;

// Rationals travel as [numerator, denominator] pairs of decimal strings so
// no consumer is tempted to round them through a float.
json to_json(const Rational& r) {
  return json::array({r.numerator().get_str(), r.denominator().get_str()});
}

json to_json(const Polynomial& p) {
  json coefficients = json::array();
  for (const Rational& c : p.coefficients()) coefficients.push_back(to_json(c));
  return coefficients;
}

json to_json(const SeriesExpansion& s) {
  json coefficients = json::array();
  for (const Polynomial& p : s.coefficients()) coefficients.push_back(to_json(p));
  return json{{"order", s.order()}, {"coefficients", coefficients}};
}

struct OutputOptions {
  std::string format = "text";
  bool wants_json() const { return format == "json"; }
};

void add_format_option(CLI::App* cmd, OutputOptions& options) {
  cmd->add_option("--format", options.format, "output encoding")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void print_series(const SeriesExpansion& series, const OutputOptions& options,
                  std::ostream& out) {
  if (options.wants_json()) {
    out << to_json(series).dump() << "\n";
    return;
  }
  for (int n = 0; n <= series.order(); ++n)
    out << "a" << n << " = " << series.coefficient(n) << "\n";
}

void print_polynomial(const Polynomial& p, const OutputOptions& options, std::ostream& out) {
  if (options.wants_json())
    out << to_json(p).dump() << "\n";
  else
    out << p << "\n";
}

int parse_index(const std::string& text, const std::string& what) {
  std::string_view sv = text;
  bool negative = !sv.empty() && sv.front() == '-';
  std::string_view digits = negative ? sv.substr(1) : sv;
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("malformed " + what + " '" + text + "'");
  int value = std::stoi(std::string(digits));
  return negative ? -value : value;
}

std::vector<int> parse_parts_list(const std::string& text) {
  std::vector<int> parts;
  std::string piece;
  std::stringstream stream(text);
  while (std::getline(stream, piece, ','))
    parts.push_back(parse_index(piece, "part"));
  if (parts.empty()) throw std::invalid_argument("empty --parts list");
  return parts;
}

std::string load_spec_text(const std::string& argument) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(argument, ec)) {
    std::ifstream in(argument);
    if (!in) throw std::invalid_argument("cannot read spec file '" + argument + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return argument; // inline spec text
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact expansion of f(1 + c1*x + c2*x^2 + ...) into power series"};
  app.name("pertex");
  app.require_subcommand(1);

  OutputOptions options;
  std::string spec_argument;
  std::string index_argument;
  std::string parts_argument;
  int order = 0;

  CLI::App* cmd_expand = app.add_subcommand("expand", "expand a spec (file path or inline text)");
  cmd_expand->add_option("--spec", spec_argument, "spec file or inline spec text")->required();
  add_format_option(cmd_expand, options);

  CLI::App* cmd_partitions =
      app.add_subcommand("partitions", "enumerate partitions in decreasing dictionary order");
  cmd_partitions->add_option("n", index_argument, "integer to partition")->required();
  CLI::Option* parts_option =
      cmd_partitions->add_option("--parts", parts_argument, "comma-separated allowed parts");
  add_format_option(cmd_partitions, options);

  CLI::App* cmd_legendre = app.add_subcommand("legendre", "Legendre polynomial P_n(u)");
  cmd_legendre->add_option("n", index_argument, "polynomial index")->required();
  add_format_option(cmd_legendre, options);

  CLI::App* cmd_hermite =
      app.add_subcommand("hermite", "probabilists' Hermite polynomial He_n(u)");
  cmd_hermite->add_option("n", index_argument, "polynomial index")->required();
  add_format_option(cmd_hermite, options);

  CLI::App* cmd_bernoulli = app.add_subcommand("bernoulli", "Bernoulli number B_n");
  cmd_bernoulli->add_option("n", index_argument, "index")->required();
  add_format_option(cmd_bernoulli, options);

  CLI::App* cmd_sec = app.add_subcommand("sec", "power series of sec(x)");
  cmd_sec->add_option("--order", order, "truncation order")->required();
  add_format_option(cmd_sec, options);

  CLI::App* cmd_multipole =
      app.add_subcommand("multipole", "two-charge potential coefficients, orders 1..N");
  cmd_multipole->add_option("--order", order, "truncation order")->required();
  add_format_option(cmd_multipole, options);

  CLI::App* cmd_gamma = app.add_subcommand("gamma", "Lorentz factor series in beta");
  cmd_gamma->add_option("--order", order, "truncation order")->required();
  add_format_option(cmd_gamma, options);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_expand->parsed()) {
      const ExpansionSpec spec = parse_spec(load_spec_text(spec_argument));
      print_series(expand(spec.derivative_sequence(), spec.perturbation(), spec.order), options,
                   out);
    } else if (cmd_partitions->parsed()) {
      const int n = parse_index(index_argument, "n");
      const std::vector<Partition> partitions =
          parts_option->count() == 0
              ? enumerate_partitions(n)
              : enumerate_restricted(n, parse_parts_list(parts_argument));
      if (options.wants_json()) {
        json rows = json::array();
        for (const Partition& p : partitions) rows.push_back(p.parts());
        out << rows.dump() << "\n";
      } else {
        for (const Partition& p : partitions) out << p << "\n";
      }
    } else if (cmd_legendre->parsed()) {
      print_polynomial(legendre(parse_index(index_argument, "n")), options, out);
    } else if (cmd_hermite->parsed()) {
      print_polynomial(hermite(parse_index(index_argument, "n")), options, out);
    } else if (cmd_bernoulli->parsed()) {
      const Rational b = bernoulli(parse_index(index_argument, "n"));
      if (options.wants_json())
        out << to_json(b).dump() << "\n";
      else
        out << b << "\n";
    } else if (cmd_sec->parsed()) {
      print_series(sec_series(order), options, out);
    } else if (cmd_multipole->parsed()) {
      const std::vector<Polynomial> coefficients = multipole_potential(order);
      if (options.wants_json()) {
        json rows = json::array();
        for (const Polynomial& p : coefficients) rows.push_back(to_json(p));
        out << json{{"start", 1}, {"coefficients", rows}}.dump() << "\n";
      } else {
        for (std::size_t k = 0; k < coefficients.size(); ++k)
          out << "a" << (k + 1) << " = " << coefficients[k] << "\n";
      }
    } else if (cmd_gamma->parsed()) {
      print_series(lorentz_gamma(order), options, out);
    }
    return 0;
  } catch (const SpecParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace pertex
