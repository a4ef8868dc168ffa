#include "noether/rational.hpp"

#include <cmath>
#include <functional>

namespace noether {

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorKind::ParseError, "empty number");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
      fail(ErrorKind::ParseError, "malformed rational '" + s + "'");
    return Rational(num, den);
  }
  const auto epos = s.find_first_of("eE");
  long exponent = 0;
  std::string mantissa = s;
  if (epos != std::string::npos) {
    try {
      exponent = std::stol(s.substr(epos + 1));
    } catch (...) {
      fail(ErrorKind::ParseError, "malformed exponent in '" + s + "'");
    }
    mantissa = s.substr(0, epos);
  }
  const auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  mpz_class digits;
  if (mantissa.empty() || digits.set_str(mantissa, 10) != 0)
    fail(ErrorKind::ParseError, "malformed number '" + s + "'");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  return exponent >= 0 ? Rational(mpz_class(digits * scale)) : Rational(digits, scale);
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) fail(ErrorKind::NumericalFailure, "non-finite value");
  return Rational(mpq_class(v));
}

Rational Rational::approximate(double v, long max_den) {
  if (!std::isfinite(v)) fail(ErrorKind::NumericalFailure, "non-finite value");
  // Same scheme as Python's Fraction.limit_denominator on the exact binary value.
  const mpq_class x(v);
  if (x.get_den() <= max_den) return Rational(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class q2 = q0 + a * q1;
    if (q2 > max_den) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  mpz_class k = (max_den - q0) / q1;
  mpq_class bound1(p0 + k * p1, q0 + k * q1);
  mpq_class bound2(p1, q1);
  bound1.canonicalize();
  bound2.canonicalize();
  return ::abs(bound2 - x) <= ::abs(bound1 - x) ? Rational(bound2) : Rational(bound1);
}

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(q_.get_str());
}

}  // namespace noether
