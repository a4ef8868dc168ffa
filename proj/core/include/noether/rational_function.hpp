#pragma once

#include <complex>
#include <span>

#include "noether/poly_gcd.hpp"

namespace noether {

// Element of Q(vars): num / den with gcd(num, den) = 1 and den monic in
// grevlex. The variable count is part of the value; arithmetic between
// different counts raises ContextMismatch.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(std::size_t nvars)
      : num_(nvars), den_(QPoly::constant(nvars, Rational(1))) {}
  RationalFunction(std::size_t nvars, const Rational& c)
      : num_(QPoly::constant(nvars, c)), den_(QPoly::constant(nvars, Rational(1))) {}
  explicit RationalFunction(QPoly num)
      : num_(std::move(num)), den_(QPoly::constant(num_.nvars(), Rational(1))) {}
  RationalFunction(QPoly num, QPoly den);

  std::size_t nvars() const noexcept { return num_.nvars(); }
  const QPoly& numerator() const noexcept { return num_; }
  const QPoly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  // Constant value; requires is_constant().
  Rational constant_value() const;

  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction scaled(const Rational& k) const {
    if (k.is_zero()) return RationalFunction(nvars());
    RationalFunction r = *this;
    r.num_ = r.num_.scaled(k);
    return r;
  }

  // Value at a complex point. |den(p)| <= tol raises DenominatorVanishes.
  std::complex<double> evaluate(std::span<const std::complex<double>> point, double tol = 0.0) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Re-reads the function in a larger ring: variable i goes to target[i].
  RationalFunction embed(std::size_t nvars_to, std::span<const std::size_t> target) const;

  // Re-applies the normal form (idempotent).
  RationalFunction normalized() const { return RationalFunction(num_, den_); }

 private:
  struct Raw {};
  RationalFunction(QPoly num, QPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RationalFunction& a) { return a.is_zero(); }
inline RationalFunction one_like(const RationalFunction& a) { return RationalFunction(a.nvars(), Rational(1)); }
inline RationalFunction zero_like(const RationalFunction& a) { return RationalFunction(a.nvars()); }
inline RationalFunction scale(const RationalFunction& a, const Rational& k) { return a.scaled(k); }
inline void check_compatible(const RationalFunction& a, const RationalFunction& b) {
  if (a.nvars() != b.nvars())
    fail(ErrorKind::ContextMismatch, "rational functions over different variable sets");
}

}  // namespace noether
