#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "noether/errors.hpp"

namespace noether {

inline constexpr std::size_t kMaxVariables = 16;

// Exponent vector x^a (or d^a) with inline storage. The length is the number
// of variables of the ambient ring, not the number of nonzero exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(check_size(nvars)) {}
  Monomial(std::initializer_list<unsigned> exps) : n_(check_size(exps.size())) {
    std::size_t i = 0;
    for (unsigned e : exps) exp_[i++] = static_cast<std::uint16_t>(e);
  }
  explicit Monomial(const std::vector<unsigned>& exps) : n_(check_size(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) exp_[i] = static_cast<std::uint16_t>(exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    Monomial m(nvars);
    m.exp_[index] = static_cast<std::uint16_t>(power);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, unsigned e) noexcept { exp_[i] = static_cast<std::uint16_t>(e); }

  unsigned degree() const noexcept {
    unsigned d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += exp_[i];
    return d;
  }

  bool is_one() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (exp_[i] != 0) return false;
    return true;
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  bool involves_only(const std::vector<bool>& allowed) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (exp_[i] != 0 && !allowed[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
    return r;
  }

  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.exp_[i] != b.exp_[i]) return false;
    return true;
  }

  // Plain lexicographic comparison of exponent vectors; used only as a
  // container key order, never as a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] < b.exp_[i];
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ exp_[i];
    return h;
  }

  std::vector<unsigned> exponents() const { return {exp_.begin(), exp_.begin() + n_}; }

 private:
  static std::uint8_t check_size(std::size_t n) {
    if (n > kMaxVariables) fail(ErrorKind::InvalidInput, "too many variables (limit 16)");
    return static_cast<std::uint8_t>(n);
  }
  static void check_same(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) fail(ErrorKind::ContextMismatch, "monomials from rings of different size");
  }

  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Graded reverse lexicographic comparison with x_0 > x_1 > ... ; returns
// negative, zero, positive like strcmp. This is the storage order of every
// Polynomial.
inline int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// Graded lexicographic with x_0 > x_1 > ...; the order on d-monomials.
inline int grlex_compare(const Monomial& a, const Monomial& b) noexcept {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

inline int lex_compare(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// All monomials in nvars variables of total degree <= max_degree, in
// ascending grlex order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree);
// Exactly degree `degree`, ascending grlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace noether

template <>
struct std::hash<noether::Monomial> {
  std::size_t operator()(const noether::Monomial& m) const noexcept { return m.hash(); }
};
