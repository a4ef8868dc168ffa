#include "noether/poly_gcd.hpp"

#include <map>

namespace noether {
namespace {

// Coefficients of p viewed as a polynomial in `var`, keyed by degree. Each
// coefficient keeps the same variable count with exponent 0 in `var`.
std::map<unsigned, QPoly> coefficients_in(const QPoly& p, std::size_t var) {
  std::map<unsigned, std::vector<QPoly::Term>> buckets;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    const unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::map<unsigned, QPoly> out;
  for (auto& [e, terms] : buckets) out.emplace(e, QPoly::from_terms(p.nvars(), std::move(terms)));
  return out;
}

QPoly leading_coefficient_in(const QPoly& p, std::size_t var, unsigned degree) {
  std::vector<QPoly::Term> terms;
  for (const auto& t : p.terms()) {
    if (t.mono[var] != degree) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    terms.push_back({m, t.coeff});
  }
  return QPoly::from_terms(p.nvars(), std::move(terms));
}

Monomial monomial_content(const QPoly& p) {
  Monomial g = p.terms().front().mono;
  for (const auto& t : p.terms()) g = gcd(g, t.mono);
  return g;
}

QPoly divide_by_monomial(const QPoly& p, const Monomial& m) {
  QPoly r = p;
  for (auto& t : r.mutable_terms()) t.mono = t.mono / m;
  return r;
}

QPoly gcd_rec(QPoly a, QPoly b);

QPoly content_in(const QPoly& p, std::size_t var) {
  QPoly g(p.nvars());
  for (const auto& [e, c] : coefficients_in(p, var)) {
    g = g.is_zero() ? make_monic(c) : gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

QPoly pseudo_remainder(QPoly r, const QPoly& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const QPoly lcb = leading_coefficient_in(b, var, db);
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(var);
    if (dr < db) break;
    const QPoly lcr = leading_coefficient_in(r, var, dr);
    r = r * lcb - (lcr * b).mul_monomial(Monomial::variable(r.nvars(), var, dr - db));
    r = primitive_integer_part(r);
  }
  return r;
}

QPoly gcd_rec(QPoly a, QPoly b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return QPoly::constant(n, Rational(1));

  // Pull out monomial factors; variables are irreducible so they split off.
  const Monomial ma = monomial_content(a), mb = monomial_content(b);
  const Monomial mg = gcd(ma, mb);
  if (!ma.is_one()) a = divide_by_monomial(a, ma);
  if (!mb.is_one()) b = divide_by_monomial(b, mb);
  const QPoly mono = QPoly::term(mg, Rational(1));
  if (a.is_constant() || b.is_constant()) return mono;

  const auto va = occurring_variables(a), vb = occurring_variables(b);
  for (std::size_t v = 0; v < n; ++v) {
    if (va[v] && !vb[v]) return mono * gcd_rec(content_in(a, v), b);
    if (vb[v] && !va[v]) return mono * gcd_rec(a, content_in(b, v));
  }

  if (a.size() >= b.size()) {
    if (auto q = divide_exact(a, b)) return mono * make_monic(b);
  } else if (auto q = divide_exact(b, a)) {
    return mono * make_monic(a);
  }

  // Main variable: the one of smallest maximal degree.
  std::size_t var = n;
  unsigned best = ~0u;
  for (std::size_t v = 0; v < n; ++v) {
    if (!va[v]) continue;
    const unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) { best = d; var = v; }
  }

  const QPoly ca = content_in(a, var), cb = content_in(b, var);
  const QPoly content = gcd_rec(ca, cb);
  QPoly pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  pa = primitive_integer_part(pa);
  pb = primitive_integer_part(pb);
  while (true) {
    QPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    // A nonzero remainder free of var means the primitive parts are coprime.
    if (r.degree_in(var) == 0) return mono * content;
    pa = std::move(pb);
    pb = primitive_integer_part(*divide_exact(r, content_in(r, var)));
  }
  return mono * make_monic(content * pb);
}

}  // namespace

std::vector<bool> occurring_variables(const QPoly& p) {
  std::vector<bool> occ(p.nvars(), false);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.mono[i] != 0) occ[i] = true;
  return occ;
}

QPoly make_monic(const QPoly& p) {
  if (p.is_zero()) return p;
  const Rational& lc = p.leading().coeff;
  if (lc.is_one()) return p;
  return p.scaled(lc.inverse());
}

QPoly primitive_integer_part(const QPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    const mpq_class& q = t.coeff.value();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
  }
  const Rational factor(den_lcm, num_gcd);
  return factor.is_one() ? p : p.scaled(factor);
}

std::optional<QPoly> divide_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.nvars() != b.nvars()) fail(ErrorKind::ContextMismatch, "polynomials from different rings");
  if (b.is_constant()) return a.scaled(b.leading().coeff.inverse());
  const auto& lt = b.leading();
  const Rational inv = lt.coeff.inverse();
  std::vector<QPoly::Term> quotient;
  QPoly r = a;
  while (!r.is_zero()) {
    const auto& head = r.leading();
    if (!lt.mono.divides(head.mono)) return std::nullopt;
    const Monomial m = head.mono / lt.mono;
    const Rational c = head.coeff * inv;
    quotient.push_back({m, c});
    r -= b.mul_term(m, c);
  }
  return QPoly::from_terms(a.nvars(), std::move(quotient));
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.nvars() != b.nvars()) fail(ErrorKind::ContextMismatch, "polynomials from different rings");
  return gcd_rec(a, b);
}

}  // namespace noether
