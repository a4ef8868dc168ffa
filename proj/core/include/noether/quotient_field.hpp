#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "noether/groebner.hpp"

namespace noether {

template <class F>
class QuotientElement;

// kappa = F[x] / P for a maximal ideal P given by a reduced zero-dimensional
// grevlex basis over F. Elements are coordinate vectors on the standard
// monomials (1 first). Construct through make_quotient_context.
template <class F>
class QuotientContext : public std::enable_shared_from_this<QuotientContext<F>> {
 public:
  QuotientContext(GroebnerBasis<F> gb, F one) : gb_(std::move(gb)), one_(std::move(one)) {
    if (!gb_.order().is_storage_order()) fail(ErrorKind::InvalidInput, "quotient basis must be grevlex");
    if (gb_.is_unit()) fail(ErrorKind::InvalidInput, "quotient by the unit ideal");
    basis_ = gb_.standard_monomials();
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    build_table();
  }

  const GroebnerBasis<F>& groebner_basis() const noexcept { return gb_; }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::size_t degree() const noexcept { return basis_.size(); }
  std::size_t nvars() const noexcept { return gb_.nvars(); }
  const F& field_one() const noexcept { return one_; }
  F field_zero() const { return zero_like(one_); }

  // Coordinates of x^m modulo P (cached; thread-safe).
  std::vector<F> monomial_image(const Monomial& m) const {
    if (auto it = index_.find(m); it != index_.end()) return unit(it->second);
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    }
    auto coords = coordinates(gb_.normal_form(Polynomial<F>::term(m, one_)));
    std::lock_guard lock(mutex_);
    cache_.emplace(m, coords);
    return coords;
  }

  // Coordinates of the normal form of p.
  std::vector<F> image(const Polynomial<F>& p) const {
    std::vector<F> out(degree(), field_zero());
    for (const auto& t : p.terms()) {
      const auto img = monomial_image(t.mono);
      for (std::size_t k = 0; k < out.size(); ++k)
        if (!coeff_zero(img[k])) out[k] = out[k] + t.coeff * img[k];
    }
    return out;
  }

  // Reads a reduced polynomial (support inside the standard monomials).
  std::vector<F> coordinates(const Polynomial<F>& reduced) const {
    std::vector<F> out(degree(), field_zero());
    for (const auto& t : reduced.terms()) {
      auto it = index_.find(t.mono);
      if (it == index_.end()) fail(ErrorKind::InvalidInput, "polynomial is not in normal form");
      out[it->second] = t.coeff;
    }
    return out;
  }

  Polynomial<F> representative(const std::vector<F>& coords) const {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (!coeff_zero(coords[k])) terms.push_back({basis_[k], coords[k]});
    return Polynomial<F>::from_terms(nvars(), std::move(terms));
  }

  std::vector<F> multiply(const std::vector<F>& a, const std::vector<F>& b) const {
    const std::size_t r = degree();
    std::vector<F> out(r, field_zero());
    for (std::size_t i = 0; i < r; ++i) {
      if (coeff_zero(a[i])) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (coeff_zero(b[j])) continue;
        const F ab = a[i] * b[j];
        const auto& row = table_[i * r + j];
        for (std::size_t k = 0; k < r; ++k)
          if (!coeff_zero(row[k])) out[k] = out[k] + ab * row[k];
      }
    }
    return out;
  }

  // Solves (multiplication by a) v = e_0 over F.
  std::vector<F> inverse(const std::vector<F>& a) const {
    const std::size_t r = degree();
    bool all_zero = true;
    for (const auto& c : a) all_zero = all_zero && coeff_zero(c);
    if (all_zero) fail(ErrorKind::DivisionByZero, "inverse of zero in the residue field");
    if (r == 1) return {one_ / a[0]};
    // Augmented matrix [M | e_0], column j of M = a * basis_j.
    std::vector<std::vector<F>> m(r, std::vector<F>(r + 1, field_zero()));
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<F> ej(r, field_zero());
      ej[j] = one_;
      const auto col = multiply(a, ej);
      for (std::size_t i = 0; i < r; ++i) m[i][j] = col[i];
    }
    m[0][r] = one_;
    for (std::size_t c = 0; c < r; ++c) {
      std::size_t p = c;
      while (p < r && coeff_zero(m[p][c])) ++p;
      if (p == r) fail(ErrorKind::NotInvertible, "zero divisor in the residue ring: the prime is not maximal");
      std::swap(m[p], m[c]);
      const F inv = one_ / m[c][c];
      for (std::size_t k = c; k <= r; ++k) m[c][k] = m[c][k] * inv;
      for (std::size_t i = 0; i < r; ++i) {
        if (i == c || coeff_zero(m[i][c])) continue;
        const F f = m[i][c];
        for (std::size_t k = c; k <= r; ++k)
          if (!coeff_zero(m[c][k])) m[i][k] = m[i][k] - f * m[c][k];
      }
    }
    std::vector<F> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m[i][r];
    return v;
  }

  QuotientElement<F> element(std::vector<F> coords) const;
  QuotientElement<F> from_polynomial(const Polynomial<F>& p) const;
  QuotientElement<F> from_scalar(const F& c) const;
  QuotientElement<F> zero() const;
  QuotientElement<F> one() const;

 private:
  static bool coeff_zero(const F& c) {
    using noether::is_zero;
    return is_zero(c);
  }
  std::vector<F> unit(std::size_t k) const {
    std::vector<F> e(degree(), field_zero());
    e[k] = one_;
    return e;
  }
  void build_table() {
    const std::size_t r = degree();
    table_.resize(r * r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        table_[i * r + j] = monomial_image(basis_[i] * basis_[j]);
        table_[j * r + i] = table_[i * r + j];
      }
  }

  GroebnerBasis<F> gb_;
  F one_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<std::vector<F>> table_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Monomial, std::vector<F>, MonomialHash> cache_;
};

template <class F>
std::shared_ptr<const QuotientContext<F>> make_quotient_context(GroebnerBasis<F> gb, F one) {
  return std::make_shared<const QuotientContext<F>>(std::move(gb), std::move(one));
}

// Element of kappa. Two elements are equal iff their coordinates agree.
template <class F>
class QuotientElement {
 public:
  using Context = QuotientContext<F>;

  QuotientElement() = default;
  QuotientElement(std::shared_ptr<const Context> ctx, std::vector<F> coords)
      : ctx_(std::move(ctx)), coords_(std::move(coords)) {}

  const std::shared_ptr<const Context>& context() const noexcept { return ctx_; }
  const std::vector<F>& coordinates() const noexcept { return coords_; }
  Polynomial<F> representative() const { return ctx_->representative(coords_); }

  bool is_zero() const {
    using noether::is_zero;
    for (const auto& c : coords_)
      if (!is_zero(c)) return false;
    return true;
  }

  QuotientElement inverse() const { return {ctx_, ctx_->inverse(coords_)}; }

  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
    check(a, b);
    std::vector<F> c = a.coords_;
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = c[k] + b.coords_[k];
    return {a.ctx_, std::move(c)};
  }
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
    check(a, b);
    std::vector<F> c = a.coords_;
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = c[k] - b.coords_[k];
    return {a.ctx_, std::move(c)};
  }
  friend QuotientElement operator-(const QuotientElement& a) {
    std::vector<F> c = a.coords_;
    for (auto& x : c) x = -x;
    return {a.ctx_, std::move(c)};
  }
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
    check(a, b);
    return {a.ctx_, a.ctx_->multiply(a.coords_, b.coords_)};
  }
  friend QuotientElement operator/(const QuotientElement& a, const QuotientElement& b) {
    return a * b.inverse();
  }
  QuotientElement& operator+=(const QuotientElement& o) { return *this = *this + o; }
  QuotientElement& operator-=(const QuotientElement& o) { return *this = *this - o; }
  QuotientElement& operator*=(const QuotientElement& o) { return *this = *this * o; }

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.ctx_ == b.ctx_ && a.coords_ == b.coords_;
  }

  QuotientElement scaled(const Rational& k) const {
    std::vector<F> c = coords_;
    for (auto& x : c) x = scale(x, k);
    return {ctx_, std::move(c)};
  }
  QuotientElement times_scalar(const F& k) const {
    std::vector<F> c = coords_;
    for (auto& x : c) x = x * k;
    return {ctx_, std::move(c)};
  }

  static void check(const QuotientElement& a, const QuotientElement& b) {
    if (a.ctx_ != b.ctx_ || !a.ctx_) fail(ErrorKind::ContextMismatch, "elements of different residue fields");
  }

 private:
  std::shared_ptr<const Context> ctx_;
  std::vector<F> coords_;
};

template <class F>
QuotientElement<F> QuotientContext<F>::element(std::vector<F> coords) const {
  if (coords.size() != degree()) fail(ErrorKind::ContextMismatch, "coordinate vector has wrong length");
  return {this->shared_from_this(), std::move(coords)};
}
template <class F>
QuotientElement<F> QuotientContext<F>::from_polynomial(const Polynomial<F>& p) const {
  return {this->shared_from_this(), image(p)};
}
template <class F>
QuotientElement<F> QuotientContext<F>::from_scalar(const F& c) const {
  std::vector<F> v(degree(), field_zero());
  v[0] = c;
  return {this->shared_from_this(), std::move(v)};
}
template <class F>
QuotientElement<F> QuotientContext<F>::zero() const { return from_scalar(field_zero()); }
template <class F>
QuotientElement<F> QuotientContext<F>::one() const { return from_scalar(one_); }

template <class F>
bool is_zero(const QuotientElement<F>& a) { return a.is_zero(); }
template <class F>
QuotientElement<F> one_like(const QuotientElement<F>& a) { return a.context()->one(); }
template <class F>
QuotientElement<F> zero_like(const QuotientElement<F>& a) { return a.context()->zero(); }
template <class F>
QuotientElement<F> scale(const QuotientElement<F>& a, const Rational& k) { return a.scaled(k); }
template <class F>
void check_compatible(const QuotientElement<F>& a, const QuotientElement<F>& b) { QuotientElement<F>::check(a, b); }

// The residue field used by the symbolic pipeline: kappa(PS) over Q(t).
using Kappa = QuotientElement<RationalFunction>;
using KappaContext = QuotientContext<RationalFunction>;

}  // namespace noether
