#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noether/driver.hpp"
#include "noether/dualspace.hpp"
#include "noether/numericops.hpp"
#include "noether/ring.hpp"
#include "noether/weyl.hpp"

namespace noether {

// ---- Text grammar -------------------------------------------------------
//
// expr   := ['+' | '-'] term { ('+' | '-') term }
// term   := unary { ('*' | '/') unary }
// unary  := '-' unary | power
// power  := atom [ '^' ['-'] integer ]
// atom   := number | identifier | '(' expr ')'
//
// Numbers are integers or decimals ("0.125", "1e-3"). Identifiers name ring
// variables; in operators "d<name>" names the derivative in that variable.
// Juxtaposition is a syntax error. Division by a non-constant is allowed
// only where rational-function coefficients are.

// Location of the first character of a parsed string, for error messages
// about text embedded in a larger file.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

QPoly parse_polynomial(std::string_view text, const VariableRing& ring, SourcePos origin = {});
RationalFunction parse_rational_function(std::string_view text, const VariableRing& ring, SourcePos origin = {});

// Coefficients are read on the left of the d-monomials, with all symbols
// commuting. `block` lists the differentiated variables (every variable when
// omitted); a d-symbol outside the block raises InvalidInput.
WeylOperator<RationalFunction> parse_operator(std::string_view text, const VariableRing& ring,
                                              std::optional<std::vector<std::size_t>> block = std::nullopt,
                                              SourcePos origin = {});
// As parse_operator, for polynomial coefficients (NotLiftable otherwise).
WeylOperator<QPoly> parse_polynomial_operator(std::string_view text, const VariableRing& ring,
                                              std::optional<std::vector<std::size_t>> block = std::nullopt,
                                              SourcePos origin = {});

// Comma-separated list of variable names.
std::vector<std::size_t> parse_variable_list(std::string_view text, const VariableRing& ring);

// Rows separated by ';', entries by ',' or whitespace ("1,2;0,1").
std::vector<std::vector<Rational>> parse_rational_matrix(std::string_view text);

// ---- Rendering ----------------------------------------------------------
//
// Every renderer produces text the parser reads back to an equal value.

std::string render_rational(const Rational& q);
std::string render_polynomial(const QPoly& p, const VariableRing& ring);
std::string render_rational_function(const RationalFunction& f, const VariableRing& ring);
std::string render_operator(const WeylOperator<RationalFunction>& op, const VariableRing& ring);
std::string render_operator(const WeylOperator<QPoly>& op, const VariableRing& ring);
// Inexact coefficients are written as shortest round-trip decimals.
std::string render_numeric_operator(const NumericOperator& op, const VariableRing& ring);
// Complex coefficients; values with |im| <= tol |c| print as real numbers.
std::string render_operator(const SpecializedOperator& op, const VariableRing& ring, double tol = 1e-12);

// ---- Problem files ------------------------------------------------------
//
//   # comment
//   ring: x1, x2, x3
//   indep: auto            (or a variable list; "none" for the empty set)
//   order: grevlex
//   dmax: 20
//   tol: 1e-8
//   ideal:
//     (x1^2 - x3)^2,
//     x2 - x3*(x1^2 - x3)
//   prime:
//     x1^2 - x3, x2
//
// Generators are separated by commas or by line breaks between complete
// expressions. A file without any "key:" header is a bare generator list
// and needs a ring from elsewhere.

struct ProblemFile {
  VariableRing ring;
  std::optional<std::vector<std::size_t>> independent;  // empty optional = auto
  std::vector<QPoly> ideal;
  std::vector<QPoly> prime;
  std::map<std::string, std::string> options;  // remaining keys, raw text
  bool has_ring = false;

  std::optional<std::string> option(const std::string& key) const;
};

ProblemFile parse_problem(std::string_view text, const VariableRing* fallback_ring = nullptr);

// ---- JSON documents (schema 1) -----------------------------------------

struct WitnessFile {
  std::vector<std::string> variables;  // may be empty
  std::vector<WitnessPoint> points;
};

// {"points": [{"coords": [[re, im], ...], "component": "id", "value": [re, im]}],
//  "variables": [...]}. Plain numbers are accepted for real coordinates.
WitnessFile parse_witness_json(std::string_view text);
std::string witness_json(const WitnessFile& w);

std::string symbolic_json(const NoetherianOperatorSet& n, const VariableRing& ring);
std::string numeric_json(const NumericOperatorSet& n, const VariableRing& ring);
std::string at_point_json(const std::vector<WitnessPoint>& points, const std::vector<PointOperators>& ops,
                          const Split& split, const VariableRing& ring);
std::string decomposition_json(const std::vector<ComponentDescription>& comps, const VariableRing& ring);
std::string membership_json(const QPoly& f, const MembershipResult& r,
                            const std::vector<ComponentDescription>& comps, const VariableRing& ring);
std::string polynomial_list_json(const std::string& key, const std::vector<QPoly>& polys, const VariableRing& ring);
// {"ideal": [...], "operators": [...]} for polynomial-coefficient operators.
std::string operator_list_json(const std::vector<QPoly>& ideal, const std::vector<WeylOperator<QPoly>>& ops,
                               const VariableRing& ring);
std::string error_json(const Error& e);

}  // namespace noether
