#include "noether/weyl.hpp"

namespace noether {
namespace {

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// All g <= a componentwise.
std::vector<Monomial> divisors_of(const Monomial& a) {
  std::vector<Monomial> out{Monomial(a.size())};
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (unsigned e = 0; e <= a[j]; ++e) {
        Monomial g = m;
        g.set(j, e);
        next.push_back(g);
      }
    out = std::move(next);
  }
  return out;
}

void check_ring(std::size_t op_vars, const QPoly& f) {
  if (op_vars != f.nvars()) fail(ErrorKind::ContextMismatch, "operator and polynomial rings differ");
}

}  // namespace

QPoly apply_operator(const WeylOperator<QPoly>& op, const QPoly& f) {
  check_ring(op.nvars(), f);
  QPoly out(f.nvars());
  for (const auto& t : op.terms()) out += t.coeff * f.derivative(t.d, op.block());
  return out;
}

RationalFunction apply_operator(const WeylOperator<RationalFunction>& op, const QPoly& f) {
  check_ring(op.nvars(), f);
  RationalFunction out(f.nvars());
  for (const auto& t : op.terms()) {
    QPoly df = f.derivative(t.d, op.block());
    if (!df.is_zero()) out += t.coeff * RationalFunction(std::move(df));
  }
  return out;
}

Kappa to_kappa(const QPoly& p, const KappaContext& ctx, const Split& split) {
  return ctx.from_polynomial(split.to_fraction(p));
}

Kappa to_kappa(const RationalFunction& c, const KappaContext& ctx, const Split& split) {
  Kappa num = to_kappa(c.numerator(), ctx, split);
  if (c.denominator().is_constant()) return num.scaled(c.denominator().leading().coeff.inverse());
  return num / to_kappa(c.denominator(), ctx, split);
}

Kappa pairing(const WeylOperator<RationalFunction>& op, const QPoly& f, const KappaContext& ctx,
              const Split& split) {
  check_ring(op.nvars(), f);
  Kappa out = ctx.zero();
  for (const auto& t : op.terms()) {
    QPoly df = f.derivative(t.d, op.block());
    if (df.is_zero()) continue;
    out += to_kappa(t.coeff, ctx, split) * to_kappa(df, ctx, split);
  }
  return out;
}

Kappa pairing(const WeylOperator<Kappa>& op, const QPoly& f, const KappaContext& ctx, const Split& split) {
  check_ring(op.nvars(), f);
  Kappa out = ctx.zero();
  for (const auto& t : op.terms()) {
    QPoly df = f.derivative(t.d, op.block());
    if (df.is_zero()) continue;
    out += t.coeff * to_kappa(df, ctx, split);
  }
  return out;
}

WeylOperator<QPoly> weyl_multiply(const WeylOperator<QPoly>& a, const WeylOperator<QPoly>& b) {
  WeylOperator<QPoly>::check_same(a, b);
  WeylOperator<QPoly> out(a.nvars(), a.block());
  for (const auto& s : a.terms()) {
    const auto gammas = divisors_of(s.d);
    for (const auto& t : b.terms()) {
      for (const auto& g : gammas) {
        QPoly db = t.coeff.derivative(g, a.block());
        if (db.is_zero()) continue;
        mpz_class c = 1;
        for (std::size_t j = 0; j < g.size(); ++j) c *= binomial(s.d[j], g[j]);
        out.add_term((s.d / g) * t.d, (s.coeff * db).scaled(Rational(c)));
      }
    }
  }
  return out;
}

WeylOperator<QPoly> right_action(const WeylOperator<QPoly>& op, const QPoly& f) {
  return weyl_multiply(op, WeylOperator<QPoly>::constant(op.nvars(), op.block(), f));
}

ApproxComplex evaluate(const QPoly& p, std::span<const ApproxComplex> point) {
  return p.evaluate<ApproxComplex>(point, [](const Rational& c) { return to_complex(c); });
}

ApproxComplex SpecializedOperator::apply_at(const QPoly& f, std::span<const ApproxComplex> point) const {
  ApproxComplex sum{};
  for (const auto& t : terms) sum += t.coeff * evaluate(f.derivative(t.d, block), point);
  return sum;
}

SpecializedOperator specialize(const WeylOperator<RationalFunction>& op, std::span<const ApproxComplex> point,
                               double tol) {
  if (point.size() != op.nvars()) fail(ErrorKind::ContextMismatch, "point has wrong dimension");
  SpecializedOperator s{op.block(), {}};
  for (const auto& t : op.terms()) {
    const ApproxComplex v = check_finite(t.coeff.evaluate(point, tol), "coefficient");
    if (std::abs(v) >= tol) s.terms.push_back({t.d, v});
  }
  return s;
}

SpecializedOperator specialize(const WeylOperator<QPoly>& op, std::span<const ApproxComplex> point, double tol) {
  if (point.size() != op.nvars()) fail(ErrorKind::ContextMismatch, "point has wrong dimension");
  SpecializedOperator s{op.block(), {}};
  for (const auto& t : op.terms()) {
    const ApproxComplex v = evaluate(t.coeff, point);
    if (std::abs(v) >= tol) s.terms.push_back({t.d, v});
  }
  return s;
}

}  // namespace noether
