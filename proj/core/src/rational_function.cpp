#include "noether/rational_function.hpp"

#include <cmath>

namespace noether {
namespace {

std::complex<double> eval_complex(const QPoly& p, std::span<const std::complex<double>> point) {
  return p.evaluate<std::complex<double>>(point, [](const Rational& c) {
    return std::complex<double>(c.to_double(), 0.0);
  });
}

}  // namespace

RationalFunction::RationalFunction(QPoly num, QPoly den) {
  if (num.nvars() != den.nvars()) fail(ErrorKind::ContextMismatch, "numerator and denominator rings differ");
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = QPoly(num.nvars());
    den_ = QPoly::constant(num.nvars(), Rational(1));
    return;
  }
  if (!den.is_constant()) {
    const QPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  const Rational lc = den.leading().coeff;
  if (!lc.is_one()) {
    const Rational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) fail(ErrorKind::InvalidInput, "rational function is not constant");
  if (num_.is_zero()) return Rational(0);
  return num_.leading().coeff / den_.leading().coeff;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero rational function");
  // Already coprime; only the monic normalization changes.
  const Rational lc = num_.leading().coeff.inverse();
  return RationalFunction(den_.scaled(lc), num_.scaled(lc), Raw{});
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  check_compatible(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) return RationalFunction(a.num_ + b.num_, a.den_, RationalFunction::Raw{});
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_constant()) return RationalFunction(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_constant()) return RationalFunction(a.num_ + b.num_ * a.den_, a.den_);
  const QPoly g = gcd(a.den_, b.den_);
  const QPoly da = *divide_exact(a.den_, g), db = *divide_exact(b.den_, g);
  return RationalFunction(a.num_ * db + b.num_ * da, a.den_ * db);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  check_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.nvars());
  if (a.den_.is_constant() && b.den_.is_constant())
    return RationalFunction(a.num_ * b.num_, a.den_, RationalFunction::Raw{});
  // Cross-cancel; the factors are already coprime pairwise within a and b.
  QPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    const QPoly g = gcd(an, bd);
    if (!g.is_constant()) { an = *divide_exact(an, g); bd = *divide_exact(bd, g); }
  }
  if (!ad.is_constant()) {
    const QPoly g = gcd(bn, ad);
    if (!g.is_constant()) { bn = *divide_exact(bn, g); ad = *divide_exact(ad, g); }
  }
  QPoly num = an * bn, den = ad * bd;
  const Rational lc = den.leading().coeff;
  if (!lc.is_one()) {
    const Rational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RationalFunction(std::move(num), std::move(den), RationalFunction::Raw{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

std::complex<double> RationalFunction::evaluate(std::span<const std::complex<double>> point,
                                                double tol) const {
  const auto d = eval_complex(den_, point);
  if (std::abs(d) <= tol || d == std::complex<double>(0.0, 0.0))
    fail(ErrorKind::DenominatorVanishes, "denominator vanishes at evaluation point");
  return eval_complex(num_, point) / d;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  auto conv = [](const Rational& c) { return c; };
  const Rational d = den_.evaluate<Rational>(point, conv);
  if (d.is_zero()) fail(ErrorKind::DenominatorVanishes, "denominator vanishes at evaluation point");
  return num_.evaluate<Rational>(point, conv) / d;
}

RationalFunction RationalFunction::embed(std::size_t nvars_to, std::span<const std::size_t> target) const {
  return RationalFunction(noether::embed(num_, nvars_to, target), noether::embed(den_, nvars_to, target),
                          Raw{});
}

}  // namespace noether
