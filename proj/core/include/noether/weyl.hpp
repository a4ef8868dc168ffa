#pragma once

#include <vector>

#include "noether/approx.hpp"
#include "noether/quotient_field.hpp"
#include "noether/ring.hpp"

namespace noether {

// Sum of c_a * d^a with coefficients on the left. The d-monomials range over
// `block` (ascending ring indices); exponent j of a d-monomial belongs to
// variable block[j]. Terms are kept descending in graded lex on d-exponents,
// so the leading term comes first.
//
// C is QPoly or RationalFunction over the full ring, or Kappa.
template <class C>
class WeylOperator {
 public:
  struct Term {
    Monomial d;
    C coeff;
    friend bool operator==(const Term& a, const Term& b) { return a.d == b.d && a.coeff == b.coeff; }
  };

  WeylOperator() = default;
  WeylOperator(std::size_t nvars, std::vector<std::size_t> block) : nvars_(nvars), block_(std::move(block)) {
    for (auto v : block_)
      if (v >= nvars_) fail(ErrorKind::InvalidInput, "differentiated variable out of range");
  }

  static WeylOperator from_terms(std::size_t nvars, std::vector<std::size_t> block, std::vector<Term> terms) {
    WeylOperator op(nvars, std::move(block));
    for (auto& t : terms) op.add_term(t.d, std::move(t.coeff));
    return op;
  }
  static WeylOperator constant(std::size_t nvars, std::vector<std::size_t> block, C c) {
    WeylOperator op(nvars, std::move(block));
    op.add_term(Monomial(op.block_.size()), std::move(c));
    return op;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<std::size_t>& block() const noexcept { return block_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading() const {
    if (terms_.empty()) fail(ErrorKind::InvalidInput, "leading term of zero operator");
    return terms_.front();
  }
  unsigned degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.d.degree());
    return d;
  }
  const C* coefficient(const Monomial& d) const {
    for (const auto& t : terms_)
      if (t.d == d) return &t.coeff;
    return nullptr;
  }

  // Adds c * d^a, merging with an existing term.
  void add_term(const Monomial& d, C c) {
    if (d.size() != block_.size()) fail(ErrorKind::ContextMismatch, "d-monomial length does not match block");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                               [](const Term& t, const Monomial& key) { return grlex_compare(t.d, key) > 0; });
    if (it != terms_.end() && it->d == d) {
      it->coeff = it->coeff + c;
      if (coeff_zero(it->coeff)) terms_.erase(it);
      return;
    }
    if (!coeff_zero(c)) terms_.insert(it, Term{d, std::move(c)});
  }

  template <class G, class Fn>
  WeylOperator<G> map_coefficients(Fn&& fn) const {
    WeylOperator<G> r(nvars_, block_);
    for (const auto& t : terms_) r.add_term(t.d, fn(t.coeff));
    return r;
  }

  // Same operator with the d-monomials re-indexed over a larger block.
  WeylOperator with_block(const std::vector<std::size_t>& wider) const {
    WeylOperator r(nvars_, wider);
    for (const auto& t : terms_) {
      Monomial d(wider.size());
      for (std::size_t j = 0; j < block_.size(); ++j) {
        auto it = std::find(wider.begin(), wider.end(), block_[j]);
        if (it == wider.end()) fail(ErrorKind::ContextMismatch, "block is not contained in the wider block");
        d.set(static_cast<std::size_t>(it - wider.begin()), t.d[j]);
      }
      r.add_term(d, t.coeff);
    }
    return r;
  }

  friend WeylOperator operator+(const WeylOperator& a, const WeylOperator& b) {
    check_same(a, b);
    WeylOperator r = a;
    for (const auto& t : b.terms_) r.add_term(t.d, t.coeff);
    return r;
  }
  friend WeylOperator operator-(const WeylOperator& a) {
    WeylOperator r = a;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend WeylOperator operator-(const WeylOperator& a, const WeylOperator& b) { return a + (-b); }

  // c * D (left multiplication by a coefficient).
  WeylOperator times(const C& c) const {
    WeylOperator r(nvars_, block_);
    for (const auto& t : terms_) r.add_term(t.d, c * t.coeff);
    return r;
  }

  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.nvars_ == b.nvars_ && a.block_ == b.block_ && a.terms_ == b.terms_;
  }

  static void check_same(const WeylOperator& a, const WeylOperator& b) {
    if (a.nvars_ != b.nvars_ || a.block_ != b.block_)
      fail(ErrorKind::ContextMismatch, "operators over different rings or blocks");
  }

 private:
  static bool coeff_zero(const C& c) {
    using noether::is_zero;
    return is_zero(c);
  }

  std::size_t nvars_ = 0;
  std::vector<std::size_t> block_;
  std::vector<Term> terms_;
};

// D • f for polynomial coefficients.
QPoly apply_operator(const WeylOperator<QPoly>& op, const QPoly& f);
// D • f for rational-function coefficients.
RationalFunction apply_operator(const WeylOperator<RationalFunction>& op, const QPoly& f);

// Image of a polynomial over the full ring in kappa(PS).
Kappa to_kappa(const QPoly& p, const KappaContext& ctx, const Split& split);
// Image of a rational function whose denominator is invertible in kappa.
Kappa to_kappa(const RationalFunction& c, const KappaContext& ctx, const Split& split);

// <D, f> in kappa(PS): the image of D • f.
Kappa pairing(const WeylOperator<RationalFunction>& op, const QPoly& f, const KappaContext& ctx,
              const Split& split);
Kappa pairing(const WeylOperator<Kappa>& op, const QPoly& f, const KappaContext& ctx, const Split& split);

// Product in the Weyl algebra, normalized with coefficients on the left:
// d^a * b = sum over g <= a of binom(a, g) (d^g b) d^(a-g).
WeylOperator<QPoly> weyl_multiply(const WeylOperator<QPoly>& a, const WeylOperator<QPoly>& b);

// The right action D . f (the operator D composed with multiplication by f).
WeylOperator<QPoly> right_action(const WeylOperator<QPoly>& op, const QPoly& f);

// Operator with constant complex coefficients obtained by evaluating every
// coefficient at a point.
struct SpecializedOperator {
  std::vector<std::size_t> block;
  struct Term {
    Monomial d;
    ApproxComplex coeff;
  };
  std::vector<Term> terms;  // descending graded lex

  const ApproxComplex* coefficient(const Monomial& d) const {
    for (const auto& t : terms)
      if (t.d == d) return &t.coeff;
    return nullptr;
  }
  // (D • f)(point).
  ApproxComplex apply_at(const QPoly& f, std::span<const ApproxComplex> point) const;
};

// Coefficients below tol in modulus are dropped. A vanishing denominator
// raises DenominatorVanishes.
SpecializedOperator specialize(const WeylOperator<RationalFunction>& op, std::span<const ApproxComplex> point,
                               double tol = kDefaultTolerance);
SpecializedOperator specialize(const WeylOperator<QPoly>& op, std::span<const ApproxComplex> point,
                               double tol = kDefaultTolerance);

ApproxComplex evaluate(const QPoly& p, std::span<const ApproxComplex> point);

}  // namespace noether
