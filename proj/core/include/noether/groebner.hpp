#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "noether/polynomial.hpp"
#include "noether/rational_function.hpp"

namespace noether {

// Term order on ring monomials. `permutation[k]` is the variable ranked k-th
// (largest first); empty means the identity ranking x_0 > x_1 > ...
struct MonomialOrder {
  enum class Kind { Grevlex, Grlex, Lex };
  Kind kind = Kind::Grevlex;
  std::vector<std::size_t> permutation;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder grlex() { return {Kind::Grlex, {}}; }
  static MonomialOrder lex() { return {Kind::Lex, {}}; }
  // "grevlex", "grlex" or "lex".
  static MonomialOrder from_name(std::string_view name);

  // True when the order coincides with Polynomial's storage order.
  bool is_storage_order() const noexcept {
    if (kind != Kind::Grevlex) return false;
    for (std::size_t i = 0; i < permutation.size(); ++i)
      if (permutation[i] != i) return false;
    return true;
  }

  int compare(const Monomial& a, const Monomial& b) const {
    if (permutation.empty()) return compare_raw(a, b);
    return compare_raw(permute(a), permute(b));
  }

 private:
  Monomial permute(const Monomial& m) const {
    Monomial r(m.size());
    for (std::size_t k = 0; k < permutation.size(); ++k) r.set(k, m[permutation[k]]);
    return r;
  }
  int compare_raw(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::Grevlex: return grevlex_compare(a, b);
      case Kind::Grlex: return grlex_compare(a, b);
      case Kind::Lex: return lex_compare(a, b);
    }
    return 0;
  }
};

// Index of the leading term of a nonzero polynomial under `order`.
template <class F>
std::size_t leading_index(const Polynomial<F>& p, const MonomialOrder& order) {
  if (p.is_zero()) fail(ErrorKind::InvalidInput, "leading term of zero polynomial");
  if (order.is_storage_order()) return 0;
  std::size_t best = 0;
  const auto& t = p.terms();
  for (std::size_t i = 1; i < t.size(); ++i)
    if (order.compare(t[i].mono, t[best].mono) > 0) best = i;
  return best;
}

template <class F>
const typename Polynomial<F>::Term& leading_term(const Polynomial<F>& p, const MonomialOrder& order) {
  return p.terms()[leading_index(p, order)];
}

template <class F>
Polynomial<F> make_monic(const Polynomial<F>& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  const F& lc = leading_term(p, order).coeff;
  return p.mul_scalar(one_like(lc) / lc);
}

// Reduced Groebner basis: every generator monic, no generator term divisible
// by another generator's leading monomial.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t nvars, MonomialOrder order, std::vector<Polynomial<F>> gens)
      : nvars_(nvars), order_(std::move(order)), gens_(std::move(gens)) {
    leads_.reserve(gens_.size());
    for (const auto& g : gens_) leads_.push_back(leading_term(g, order_).mono);
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial<F>>& generators() const noexcept { return gens_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_unit() const {
    for (const auto& m : leads_)
      if (m.is_one()) return true;
    return false;
  }

  // Remainder of full multivariate division; canonical for a reduced basis.
  Polynomial<F> normal_form(Polynomial<F> p) const {
    if (p.nvars() != nvars_) fail(ErrorKind::ContextMismatch, "polynomial and basis rings differ");
    std::vector<typename Polynomial<F>::Term> rem;
    while (!p.is_zero()) {
      const std::size_t li = leading_index(p, order_);
      const auto head = p.terms()[li];
      std::size_t g = 0;
      while (g < gens_.size() && !leads_[g].divides(head.mono)) ++g;
      if (g == gens_.size()) {
        rem.push_back(head);
        auto& ts = p.mutable_terms();
        ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(li));
        continue;
      }
      // Generators are monic, so the multiplier is head.coeff itself.
      p -= gens_[g].mul_term(head.mono / leads_[g], head.coeff);
    }
    return Polynomial<F>::from_terms(nvars_, std::move(rem));
  }

  bool contains(const Polynomial<F>& p) const { return normal_form(p).is_zero(); }

  // True iff for every variable some leading monomial is a pure power of it.
  bool is_zero_dimensional() const {
    if (is_unit()) return true;
    for (std::size_t v = 0; v < nvars_; ++v) {
      bool found = false;
      for (const auto& m : leads_) {
        if (m[v] == 0) continue;
        if (m.degree() == m[v]) { found = true; break; }
      }
      if (!found) return false;
    }
    return true;
  }

  // Monomials outside the leading-term ideal, ascending in grevlex (1 first).
  // Requires a zero-dimensional proper ideal.
  std::vector<Monomial> standard_monomials() const {
    if (is_unit()) return {};
    if (!is_zero_dimensional()) fail(ErrorKind::InvalidInput, "quotient is not finite-dimensional");
    std::vector<Monomial> out;
    std::vector<Monomial> frontier{Monomial(nvars_)};
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& m : frontier) {
        if (is_leading_multiple(m)) continue;
        if (std::find(out.begin(), out.end(), m) != out.end()) continue;
        out.push_back(m);
        for (std::size_t v = 0; v < nvars_; ++v) next.push_back(m * Monomial::variable(nvars_, v));
      }
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
      return grevlex_compare(a, b) < 0;
    });
    return out;
  }

  bool is_leading_multiple(const Monomial& m) const {
    for (const auto& l : leads_)
      if (l.divides(m)) return true;
    return false;
  }

 private:
  std::size_t nvars_ = 0;
  MonomialOrder order_;
  std::vector<Polynomial<F>> gens_;
  std::vector<Monomial> leads_;
};

namespace detail {

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, const MonomialOrder& order) {
  const auto& lf = leading_term(f, order);
  const auto& lg = leading_term(g, order);
  const Monomial l = lcm(lf.mono, lg.mono);
  const F one = one_like(lf.coeff);
  return f.mul_term(l / lf.mono, one / lf.coeff) - g.mul_term(l / lg.mono, one / lg.coeff);
}

// Top-reduction of p by the current (not necessarily reduced) set.
template <class F>
Polynomial<F> reduce_by(Polynomial<F> p, const std::vector<Polynomial<F>>& gs,
                        const std::vector<Monomial>& leads, const MonomialOrder& order) {
  std::vector<typename Polynomial<F>::Term> rem;
  while (!p.is_zero()) {
    const std::size_t li = leading_index(p, order);
    const auto head = p.terms()[li];
    std::size_t g = 0;
    while (g < gs.size() && !leads[g].divides(head.mono)) ++g;
    if (g == gs.size()) {
      rem.push_back(head);
      auto& ts = p.mutable_terms();
      ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(li));
      continue;
    }
    const F& lc = leading_term(gs[g], order).coeff;
    p -= gs[g].mul_term(head.mono / leads[g], head.coeff / lc);
  }
  return Polynomial<F>::from_terms(p.nvars(), std::move(rem));
}

}  // namespace detail

// Buchberger's algorithm with normal pair selection and the coprime-leading-
// term criterion. Returns the reduced basis; the zero ideal gives an empty one.
template <class F>
GroebnerBasis<F> buchberger(std::vector<Polynomial<F>> gens, const MonomialOrder& order, std::size_t nvars) {
  std::vector<Polynomial<F>> g;
  std::vector<Monomial> leads;
  for (auto& p : gens) {
    if (p.nvars() != nvars) fail(ErrorKind::ContextMismatch, "generator has wrong variable count");
    if (p.is_zero()) continue;
    p = make_monic(p, order);
    g.push_back(std::move(p));
    leads.push_back(leading_term(g.back(), order).mono);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    std::size_t pick = 0;
    Monomial best = lcm(leads[pairs[0].first], leads[pairs[0].second]);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      Monomial l = lcm(leads[pairs[k].first], leads[pairs[k].second]);
      if (order.compare(l, best) < 0) { best = l; pick = k; }
    }
    const auto [i, j] = pairs[pick];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(pick));
    if (best == leads[i] * leads[j]) continue;

    Polynomial<F> r = detail::reduce_by(detail::s_polynomial(g[i], g[j], order), g, leads, order);
    if (r.is_zero()) continue;
    r = make_monic(r, order);
    if (leading_term(r, order).mono.is_one()) {
      return GroebnerBasis<F>(nvars, order, {Polynomial<F>::constant(nvars, one_like(r.terms().front().coeff))});
    }
    const std::size_t k = g.size();
    leads.push_back(leading_term(r, order).mono);
    g.push_back(std::move(r));
    for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
  }

  // Minimize: drop generators whose leading monomial is divisible by another.
  std::vector<bool> keep(g.size(), true);
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (leads[b].divides(leads[a]) && (leads[a] != leads[b] || b < a)) keep[a] = false;
    }
  }
  std::vector<Polynomial<F>> minimal;
  std::vector<Monomial> min_leads;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (!keep[a]) continue;
    minimal.push_back(g[a]);
    min_leads.push_back(leads[a]);
  }

  // Interreduce the tails.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial<F>> others;
    std::vector<Monomial> other_leads;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b == a) continue;
      others.push_back(minimal[b]);
      other_leads.push_back(min_leads[b]);
    }
    minimal[a] = make_monic(detail::reduce_by(minimal[a], others, other_leads, order), order);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial<F>& x, const Polynomial<F>& y) {
    return order.compare(leading_term(x, order).mono, leading_term(y, order).mono) < 0;
  });
  return GroebnerBasis<F>(nvars, order, std::move(minimal));
}

// True when every S-polynomial of the basis reduces to zero.
template <class F>
bool s_pairs_reduce_to_zero(const GroebnerBasis<F>& gb) {
  const auto& g = gb.generators();
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!gb.normal_form(detail::s_polynomial(g[i], g[j], gb.order())).is_zero()) return false;
  return true;
}

struct DimensionInfo {
  std::size_t dimension = 0;
  std::vector<std::size_t> independent;  // ascending variable indices
};

// Krull dimension and the lexicographically first maximal independent set,
// read off the leading-term ideal. The unit ideal raises EmptyVariety.
DimensionInfo dimension_and_independent_set(const std::vector<Monomial>& leading, std::size_t nvars);

template <class F>
DimensionInfo dimension_and_independent_set(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) fail(ErrorKind::EmptyVariety, "the ideal is the unit ideal");
  return dimension_and_independent_set(gb.leading_monomials(), gb.nvars());
}

}  // namespace noether
