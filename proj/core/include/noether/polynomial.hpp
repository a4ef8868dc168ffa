#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "noether/errors.hpp"
#include "noether/monomial.hpp"
#include "noether/rational.hpp"

namespace noether {

inline Rational scale(const Rational& c, const Rational& k) { return c * k; }

// Falling factorial e (e-1) ... (e-k+1).
inline long falling_factorial(unsigned e, unsigned k) {
  long r = 1;
  for (unsigned j = 0; j < k; ++j) r *= static_cast<long>(e - j);
  return r;
}

// Sparse multivariate polynomial over a field F. Terms are kept strictly
// descending in grevlex (x_0 > x_1 > ...) with no zero coefficients, so two
// polynomials are equal iff their term vectors are equal.
//
// F must provide: is_zero(F), F + F, F - F, F * F, -F, F == F,
// scale(F, Rational) and check_compatible(F, F).
template <class F>
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    F coeff;
    friend bool operator==(const Term& a, const Term& b) {
      return a.mono == b.mono && a.coeff == b.coeff;
    }
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, F c) {
    Polynomial p(nvars);
    if (!coeff_zero(c)) p.terms_.push_back({Monomial(nvars), std::move(c)});
    return p;
  }
  static Polynomial term(Monomial m, F c) {
    Polynomial p(m.size());
    if (!coeff_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t index, F one) {
    return term(Monomial::variable(nvars, index), std::move(one));
  }
  // Builds from arbitrary terms; sorts and combines duplicates.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    for (const auto& t : terms)
      if (t.mono.size() != nvars) fail(ErrorKind::ContextMismatch, "term has wrong variable count");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
        if (coeff_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!coeff_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  // Leading term in grevlex.
  const Term& leading() const {
    if (terms_.empty()) fail(ErrorKind::InvalidInput, "leading term of zero polynomial");
    return terms_.front();
  }

  unsigned total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  unsigned degree_in(std::size_t var) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }

  const F* find(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return grevlex_compare(t.mono, key) > 0;
    });
    if (it != terms_.end() && it->mono == m) return &it->coeff;
    return nullptr;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, true); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  friend Polynomial operator-(Polynomial a) {
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_nvars(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_.front().mono, b.terms_.front().coeff);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_.front().mono, a.terms_.front().coeff);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(a.nvars_, std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  // Multiplication by c * m; the grevlex order is preserved by monomial
  // multiplication so no re-sorting is needed.
  Polynomial mul_term(const Monomial& m, const F& c) const {
    Polynomial r(nvars_);
    if (coeff_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      F v = t.coeff * c;
      if (!coeff_zero(v)) r.terms_.push_back({t.mono * m, std::move(v)});
    }
    return r;
  }
  Polynomial mul_scalar(const F& c) const { return mul_term(Monomial(nvars_), c); }
  Polynomial mul_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }
  Polynomial scaled(const Rational& k) const {
    Polynomial r(nvars_);
    if (k.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, scale(t.coeff, k)});
    return r;
  }

  // d^k/dx_var^k.
  Polynomial derivative(std::size_t var, unsigned k = 1) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      const unsigned e = t.mono[var];
      if (e < k) continue;
      Monomial m = t.mono;
      m.set(var, e - k);
      out.push_back({m, scale(t.coeff, Rational(falling_factorial(e, k)))});
    }
    // Differentiation in one variable may reorder terms, so re-sort.
    return from_terms(nvars_, std::move(out));
  }

  // d^alpha, where alpha is indexed by `vars` (alpha[j] applies to vars[j]).
  Polynomial derivative(const Monomial& alpha, std::span<const std::size_t> vars) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      long factor = 1;
      bool vanishes = false;
      for (std::size_t j = 0; j < vars.size() && !vanishes; ++j) {
        const unsigned k = alpha[j];
        if (k == 0) continue;
        const unsigned e = m[vars[j]];
        if (e < k) { vanishes = true; break; }
        factor *= falling_factorial(e, k);
        m.set(vars[j], e - k);
      }
      if (!vanishes) out.push_back({m, scale(t.coeff, Rational(factor))});
    }
    return from_terms(nvars_, std::move(out));
  }

  template <class G, class Fn>
  Polynomial<G> map_coefficients(Fn&& fn) const {
    std::vector<typename Polynomial<G>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, fn(t.coeff)});
    return Polynomial<G>::from_terms(nvars_, std::move(out));
  }

  // Evaluates at a point of values V; coeff_value converts a coefficient to V.
  template <class V, class Conv>
  V evaluate(std::span<const V> point, Conv&& coeff_value) const {
    if (point.size() != nvars_) fail(ErrorKind::ContextMismatch, "evaluation point has wrong dimension");
    V sum{};
    for (const auto& t : terms_) {
      V v = coeff_value(t.coeff);
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned e = 0; e < t.mono[i]; ++e) v = v * point[i];
      sum = sum + v;
    }
    return sum;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Direct access for algorithms that maintain the invariants themselves.
  std::vector<Term>& mutable_terms() noexcept { return terms_; }

 private:
  static bool coeff_zero(const F& c) {
    using noether::is_zero;
    return is_zero(c);
  }
  static void check_nvars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) fail(ErrorKind::ContextMismatch, "polynomials from different rings");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_nvars(a, b);
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      int c;
      if (i == a.terms_.end()) c = -1;
      else if (j == b.terms_.end()) c = 1;
      else c = grevlex_compare(i->mono, j->mono);
      if (c > 0) {
        r.terms_.push_back(*i++);
      } else if (c < 0) {
        r.terms_.push_back({j->mono, subtract ? -j->coeff : j->coeff});
        ++j;
      } else {
        check_compatible(i->coeff, j->coeff);
        F v = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
        if (!coeff_zero(v)) r.terms_.push_back({i->mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

using QPoly = Polynomial<Rational>;

template <class F>
bool is_zero(const Polynomial<F>& p) {
  return p.is_zero();
}
template <class F>
void check_compatible(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.nvars() != b.nvars()) fail(ErrorKind::ContextMismatch, "polynomials from different rings");
}

// Substitutes each variable of p (over nvars_from variables) into a ring of
// nvars_to variables: variable i maps to target[i].
template <class F>
Polynomial<F> embed(const Polynomial<F>& p, std::size_t nvars_to, std::span<const std::size_t> target) {
  std::vector<typename Polynomial<F>::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(nvars_to);
    for (std::size_t i = 0; i < p.nvars(); ++i) m.set(target[i], m[target[i]] + t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return Polynomial<F>::from_terms(nvars_to, std::move(out));
}

template <class F>
Polynomial<F> power(const Polynomial<F>& p, unsigned k, const F& one) {
  Polynomial<F> r = Polynomial<F>::constant(p.nvars(), one);
  Polynomial<F> base = p;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

}  // namespace noether
