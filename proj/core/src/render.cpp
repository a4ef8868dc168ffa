#include "noether/frontend.hpp"

namespace noether {

namespace {

// Coefficient text with its sign pulled out. `atomic` bodies can be
// followed by "*d..." without parentheses.
struct CoeffText {
  bool negative = false;
  bool is_one = false;
  bool atomic = true;
  std::string body;
};

std::string power_factor(const std::string& name, unsigned e) {
  return e == 1 ? name : name + "^" + std::to_string(e);
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += power_factor(names[i], m[i]);
  }
  return s;
}

// Sum of terms with a caller-supplied magnitude renderer.
template <class Fn>
std::string sum_text(const QPoly& p, const VariableRing& ring, Fn&& magnitude) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = t.coeff.sign() < 0;
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    first = false;
    const Rational a = t.coeff.abs();
    const std::string mono = monomial_text(t.mono, ring.names());
    if (mono.empty()) s += magnitude(a);
    else if (a.is_one()) s += mono;
    else s += magnitude(a) + "*" + mono;
  }
  return s;
}

std::string exact_magnitude(const Rational& q) { return q.to_string(); }
std::string decimal_magnitude(const Rational& q) { return format_double(q.to_double()); }

template <class Fn>
std::string fraction_text(const QPoly& num, const QPoly& den, const VariableRing& ring, Fn&& magnitude) {
  std::string n = sum_text(num, ring, magnitude);
  if (den.is_constant() && den.terms().front().coeff.is_one()) return n;
  if (num.size() > 1) n = "(" + n + ")";
  std::string d = sum_text(den, ring, magnitude);
  const bool simple = den.size() == 1 && d.find_first_of("*/") == std::string::npos;
  return n + "/" + (simple ? d : "(" + d + ")");
}

template <class Fn>
CoeffText coefficient_text(QPoly num, const QPoly& den, const VariableRing& ring, Fn&& magnitude) {
  CoeffText c;
  if (!num.is_zero() && num.terms().front().coeff.sign() < 0) {
    c.negative = true;
    num = -num;
  }
  const bool unit_den = den.is_constant() && den.terms().front().coeff.is_one();
  c.is_one = unit_den && num.is_constant() && num.terms().front().coeff.is_one();
  c.body = fraction_text(num, den, ring, magnitude);
  c.atomic = unit_den ? num.size() == 1 : false;
  if (unit_den && num.size() > 1) {
    c.body = "(" + c.body + ")";
    c.atomic = true;
  }
  return c;
}

std::string operator_text(const std::vector<std::pair<Monomial, CoeffText>>& terms,
                          const std::vector<std::size_t>& block, const VariableRing& ring) {
  if (terms.empty()) return "0";
  std::vector<std::string> dnames;
  for (auto v : block) dnames.push_back("d" + ring.name(v));
  std::string s;
  bool first = true;
  for (const auto& [d, c] : terms) {
    if (first) s += c.negative ? "-" : "";
    else s += c.negative ? " - " : " + ";
    first = false;
    const std::string dm = monomial_text(d, dnames);
    if (dm.empty()) s += c.body;
    else if (c.is_one) s += dm;
    else s += (c.atomic ? c.body : "(" + c.body + ")") + "*" + dm;
  }
  return s;
}

}  // namespace

std::string render_rational(const Rational& q) { return q.to_string(); }

std::string render_polynomial(const QPoly& p, const VariableRing& ring) {
  return sum_text(p, ring, exact_magnitude);
}

std::string render_rational_function(const RationalFunction& f, const VariableRing& ring) {
  return fraction_text(f.numerator(), f.denominator(), ring, exact_magnitude);
}

std::string render_operator(const WeylOperator<RationalFunction>& op, const VariableRing& ring) {
  std::vector<std::pair<Monomial, CoeffText>> terms;
  for (const auto& t : op.terms())
    terms.emplace_back(t.d, coefficient_text(t.coeff.numerator(), t.coeff.denominator(), ring, exact_magnitude));
  return operator_text(terms, op.block(), ring);
}

std::string render_operator(const WeylOperator<QPoly>& op, const VariableRing& ring) {
  const QPoly one = QPoly::constant(op.nvars(), Rational(1));
  std::vector<std::pair<Monomial, CoeffText>> terms;
  for (const auto& t : op.terms()) terms.emplace_back(t.d, coefficient_text(t.coeff, one, ring, exact_magnitude));
  return operator_text(terms, op.block(), ring);
}

std::string render_numeric_operator(const NumericOperator& op, const VariableRing& ring) {
  std::vector<std::pair<Monomial, CoeffText>> terms;
  for (const auto& t : op.terms) {
    if (t.coeff.exact) {
      const RationalFunction f = t.coeff.as_rational_function();
      terms.emplace_back(t.d, coefficient_text(f.numerator(), f.denominator(), ring, exact_magnitude));
    } else {
      terms.emplace_back(t.d, coefficient_text(t.coeff.numerator, t.coeff.denominator, ring, decimal_magnitude));
    }
  }
  return operator_text(terms, op.block, ring);
}

std::string render_operator(const SpecializedOperator& op, const VariableRing& ring, double tol) {
  std::vector<std::pair<Monomial, CoeffText>> terms;
  for (const auto& t : op.terms) {
    CoeffText c;
    if (std::abs(t.coeff.imag()) <= tol * std::abs(t.coeff)) {
      c.negative = t.coeff.real() < 0;
      const double a = std::abs(t.coeff.real());
      c.is_one = a == 1.0;
      c.body = format_double(a);
    } else {
      c.body = "(" + format_complex(t.coeff) + ")";
    }
    terms.emplace_back(t.d, c);
  }
  return operator_text(terms, op.block, ring);
}

}  // namespace noether
