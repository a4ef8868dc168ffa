#include "noether/driver.hpp"

namespace noether {

std::vector<SpecializedOperator> ComponentDescription::specialized_at(std::span<const ApproxComplex> point) const {
  std::vector<SpecializedOperator> out;
  if (symbolic) {
    for (const auto& op : symbolic->operators) out.push_back(specialize(op, point, 0.0));
  } else if (numeric) {
    for (const auto& op : numeric->operators) out.push_back(op.specialize(point));
  } else {
    fail(ErrorKind::InvalidInput, "component '" + id + "' has no operators");
  }
  return out;
}

std::size_t ComponentDescription::multiplicity() const {
  if (symbolic) return symbolic->multiplicity();
  if (numeric) return numeric->multiplicity();
  return 0;
}

MembershipResult membership_test(const QPoly& f, const std::vector<ComponentDescription>& components,
                                 std::size_t trials, double tol) {
  MembershipResult r;
  for (const auto& c : components) {
    if (c.points.size() < trials)
      fail(ErrorKind::NeedMorePoints, "component '" + c.id + "' has " + std::to_string(c.points.size()) +
                                          " points, " + std::to_string(trials) + " needed");
    double worst = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
      const auto& p = c.points[i].coords;
      for (const auto& op : c.specialized_at(p)) {
        ApproxComplex value = 0.0;
        double scale = 0.0;
        for (const auto& t : op.terms) {
          const QPoly df = f.derivative(t.d, op.block);
          for (const auto& term : df.terms()) {
            const ApproxComplex v = t.coeff * evaluate(QPoly::term(term.mono, term.coeff), p);
            value += v;
            scale += std::abs(v);
          }
        }
        worst = std::max(worst, std::abs(value) / std::max(1.0, scale));
      }
    }
    const bool member = worst <= tol;
    r.per_component.push_back(member);
    r.worst.push_back(worst);
    r.member = r.member && member;
  }
  return r;
}

std::vector<ComponentDescription> numerical_primary_decomposition(const std::vector<QPoly>& generators,
                                                                  const std::vector<WitnessGroup>& witness,
                                                                  const Split& split, const NumericOptions& options) {
  std::vector<ComponentDescription> out;
  for (const auto& w : witness) {
    ComponentDescription c;
    c.id = w.id;
    c.points = w.points;
    try {
      c.numeric = numerical_noetherian_operators(generators, w.points, split, options);
    } catch (const Error& e) {
      c.error = std::string(kind_name(e.kind())) + ": " + e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

RationalMatrix invert(const RationalMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) fail(ErrorKind::InvalidInput, "change of coordinates must be a square matrix");
  RationalMatrix m = a, inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) fail(ErrorKind::SingularChange, "change of coordinates is singular");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational s = m[c][c].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] *= s;
      inv[c][k] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[i][k] -= f * m[c][k];
        inv[i][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

namespace {

// Substitutes y_i -> sum_j rows[i][j] x_j into a polynomial in y.
QPoly linear_substitution(const QPoly& f, const RationalMatrix& rows) {
  const std::size_t n = f.nvars();
  if (rows.size() != n) fail(ErrorKind::ContextMismatch, "matrix size does not match the ring");
  std::vector<QPoly> lin;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<QPoly::Term> ts;
    for (std::size_t j = 0; j < n; ++j) ts.push_back({Monomial::variable(n, j), rows[i][j]});
    lin.push_back(QPoly::from_terms(n, std::move(ts)));
  }
  std::vector<std::vector<QPoly>> powers(n);
  QPoly out(n);
  for (const auto& t : f.terms()) {
    QPoly term = QPoly::constant(n, t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned e = t.mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(QPoly::constant(n, Rational(1)));
      while (pw.size() <= e) pw.push_back(pw.back() * lin[i]);
      term = term * pw[e];
    }
    out += term;
  }
  return out;
}

}  // namespace

QPoly substitute(const QPoly& f, const RationalMatrix& a) { return linear_substitution(f, a); }

WeylOperator<QPoly> transform_operator(const WeylOperator<QPoly>& op, const RationalMatrix& a) {
  const std::size_t n = op.nvars();
  const RationalMatrix b = invert(a);
  // d_i -> sum_k b[k][i] d_k, i.e. substitution with the transpose of b.
  RationalMatrix bt(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) bt[i][k] = b[k][i];

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const auto full = op.with_block(all);
  WeylOperator<QPoly> out(n, all);
  for (const auto& t : full.terms()) {
    const QPoly coeff = substitute(t.coeff, a);
    // The d-monomial as a commutative polynomial in d_0..d_{n-1}.
    const QPoly dpoly = linear_substitution(QPoly::term(t.d, Rational(1)), bt);
    for (const auto& dt : dpoly.terms()) out.add_term(dt.mono, coeff.scaled(dt.coeff));
  }
  return out;
}

std::vector<WeylOperator<QPoly>> transform_operators(const std::vector<WeylOperator<QPoly>>& ops,
                                                     const RationalMatrix& a) {
  std::vector<WeylOperator<QPoly>> out;
  out.reserve(ops.size());
  for (const auto& op : ops) out.push_back(transform_operator(op, a));
  return out;
}

std::vector<QPoly> apply_to_generators(const std::vector<WeylOperator<QPoly>>& ops, const std::vector<QPoly>& g) {
  std::vector<QPoly> out;
  for (const auto& op : ops)
    for (const auto& f : g) {
      QPoly r = apply_operator(op, f);
      if (!r.is_zero()) out.push_back(std::move(r));
    }
  return out;
}

}  // namespace noether
