#pragma once

// Shared fixtures for the unit tests and the acceptance binary: random
// generators, the example corpus and the exact defining-property check.

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "noether/driver.hpp"
#include "noether/dualspace.hpp"
#include "noether/frontend.hpp"
#include "noether/numericops.hpp"

#ifndef NOETHER_TEST_DATA_DIR
#define NOETHER_TEST_DATA_DIR "tests/data"
#endif

namespace noether::testing {

inline std::string data_path(const std::string& name) { return std::string(NOETHER_TEST_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline VariableRing ring(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return VariableRing(v);
}

inline QPoly P(const std::string& text, const VariableRing& r) { return parse_polynomial(text, r); }

inline std::vector<QPoly> Ps(std::initializer_list<const char*> texts, const VariableRing& r) {
  std::vector<QPoly> out;
  for (const char* t : texts) out.push_back(P(t, r));
  return out;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  Rational rational(long range = 9, long max_den = 5) {
    long num = integer(-range, range);
    return Rational(num, integer(1, max_den));
  }
  Rational nonzero_rational(long range = 9, long max_den = 5) {
    for (;;) {
      Rational q = rational(range, max_den);
      if (!q.is_zero()) return q;
    }
  }

  Monomial monomial(std::size_t n, unsigned max_degree) {
    Monomial m(n);
    const unsigned d = static_cast<unsigned>(integer(0, max_degree));
    for (unsigned k = 0; k < d && n > 0; ++k) {
      const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      m.set(i, m[i] + 1);
    }
    return m;
  }

  QPoly poly(std::size_t n, unsigned max_degree, std::size_t max_terms, long range = 9) {
    std::vector<QPoly::Term> terms;
    const auto count = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
    for (std::size_t k = 0; k < count; ++k) terms.push_back({monomial(n, max_degree), rational(range, 3)});
    return QPoly::from_terms(n, std::move(terms));
  }

  RationalFunction rational_function(std::size_t n, unsigned max_degree = 2) {
    QPoly den = poly(n, max_degree, 2);
    while (den.is_zero()) den = poly(n, max_degree, 2);
    return RationalFunction(poly(n, max_degree, 3), den);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// One primary ideal with its prime and some rational points of V(P).
struct CorpusIdeal {
  std::string name;
  VariableRing ring;
  std::vector<QPoly> ideal;
  std::vector<QPoly> prime;
  std::vector<std::vector<Rational>> points;
  bool zero_dimensional = false;
};

inline std::vector<CorpusIdeal> corpus() {
  std::vector<CorpusIdeal> c;
  auto add = [&](std::string name, VariableRing r, std::initializer_list<const char*> i,
                 std::initializer_list<const char*> p, std::vector<std::vector<Rational>> pts, bool zero) {
    CorpusIdeal e{std::move(name), r, Ps(i, r), Ps(p, r), std::move(pts), zero};
    c.push_back(std::move(e));
  };
  const auto xy = ring({"x", "y"});
  const auto xyz = ring({"x", "y", "z"});
  add("line^2", xy, {"(x + y + 1)^2"}, {"x + y + 1"}, {{-3, 2}, {0, -1}}, false);
  add("line^3", xy, {"(x + y + 1)^3"}, {"x + y + 1"}, {{-3, 2}, {0, -1}}, false);
  add("line^4", xy, {"(x + y + 1)^4"}, {"x + y + 1"}, {{-3, 2}, {0, -1}}, false);
  add("m^2", xy, {"x^2", "x*y", "y^2"}, {"x", "y"}, {{0, 0}}, true);
  add("m^3", xy, {"x^3", "x^2*y", "x*y^2", "y^3"}, {"x", "y"}, {{0, 0}}, true);
  add("fat", xy, {"x^3", "x*y", "y^2"}, {"x", "y"}, {{0, 0}}, true);
  add("curvilinear", xy, {"y - x^2", "x^3"}, {"x", "y"}, {{0, 0}}, true);
  add("shifted", xy, {"(x - 1)^2", "(x - 1)*(y + 2)", "(y + 2)^2"}, {"x - 1", "y + 2"}, {{1, -2}}, true);
  add("cube", xyz, {"x^2", "y^2", "z^2", "x*y*z"}, {"x", "y", "z"}, {{0, 0, 0}}, true);
  add("twisted-curvilinear", xyz, {"y - x^2", "z - x^3", "x^4"}, {"x", "y", "z"}, {{0, 0, 0}}, true);
  add("irrational-point", xy, {"(x^2 - 2)^2", "y^2"}, {"x^2 - 2", "y"}, {}, true);
  add("non-rational-prime", ring({"x1", "x2", "x3"}), {"(x1^2 - x3)^2", "x2 - x3*(x1^2 - x3)"}, {"x1^2 - x3", "x2"},
      {{2, 0, 4}, {1, 0, 1}, {-3, 0, 9}}, false);
  add("xty", ring({"t", "x", "y"}), {"x^2 - t*y", "y^2"}, {"x", "y"}, {{1, 0, 0}, {3, 0, 0}}, false);
  return c;
}

inline std::vector<ApproxComplex> to_complex(const std::vector<Rational>& p) {
  std::vector<ApproxComplex> out;
  for (const auto& q : p) out.push_back(noether::to_complex(q));
  return out;
}

struct PropertyReport {
  std::size_t members = 0;
  std::size_t non_members = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

// Random test polynomials for an ideal: members, members plus noise and
// members plus multiples of the prime generators.
inline QPoly random_test_polynomial(const std::vector<QPoly>& ideal, const std::vector<QPoly>& prime, Rng& rng,
                                    std::size_t k) {
  const std::size_t n = ideal.front().nvars();
  QPoly f(n);
  for (const auto& g : ideal)
    if (rng.integer(0, 2) > 0) f += rng.poly(n, 2, 3) * g;
  switch (k % 4) {
    case 0:
      break;
    case 1:
      f += rng.poly(n, 3, 3);
      break;
    case 2:
      f += rng.poly(n, 2, 2) * prime[static_cast<std::size_t>(rng.integer(0, static_cast<long>(prime.size()) - 1))];
      break;
    default: {
      // Products of prime generators reach deeper into the primary ideal.
      QPoly h = rng.poly(n, 1, 2);
      const long depth = rng.integer(1, 4);
      for (long j = 0; j < depth; ++j)
        h = h * prime[static_cast<std::size_t>(rng.integer(0, static_cast<long>(prime.size()) - 1))];
      f += h;
    }
  }
  return f;
}

// f in I  <=>  NF(D f, GB(P)) = 0 for every D, checked exactly on `count`
// random polynomials.
inline PropertyReport check_defining_property(const std::vector<QPoly>& ideal, const std::vector<QPoly>& prime,
                                              const std::vector<WeylOperator<QPoly>>& ops, Rng& rng,
                                              std::size_t count) {
  const std::size_t n = ideal.front().nvars();
  const auto gi = buchberger(ideal, MonomialOrder::grevlex(), n);
  const auto gp = buchberger(prime, MonomialOrder::grevlex(), n);
  PropertyReport r;
  for (std::size_t k = 0; k < count; ++k) {
    const QPoly f = random_test_polynomial(ideal, prime, rng, k);
    const bool member = gi.contains(f);
    bool killed = true;
    for (const auto& d : ops) killed = killed && gp.contains(apply_operator(d, f));
    (member ? r.members : r.non_members)++;
    if (member != killed) {
      if (r.failures++ == 0) r.first_failure = "polynomial #" + std::to_string(k);
    }
  }
  return r;
}

// Degree of a homogeneous ideal from its Groebner basis: the Hilbert
// function of R/I counts standard monomials of degree k; its (dim-1)-th
// difference at large k is the degree.
inline long hilbert_degree(const GroebnerBasis<Rational>& gb, std::size_t projective_dim, unsigned k = 30) {
  auto h = [&](unsigned d) {
    long count = 0;
    for (const auto& m : monomials_of_degree(gb.nvars(), d))
      if (!gb.is_leading_multiple(m)) ++count;
    return count;
  };
  std::vector<long> vals;
  for (unsigned j = 0; j <= projective_dim; ++j) vals.push_back(h(k + j));
  for (std::size_t level = 0; level < projective_dim; ++level)
    for (std::size_t j = 0; j + 1 < vals.size() - level; ++j) vals[j] = vals[j + 1] - vals[j];
  return vals.front();
}

// The quartic scroll example: three generators in x0..x5 and the five
// minimal primes of the ideal they generate.
struct ScrollExample {
  VariableRing ring = VariableRing({"x0", "x1", "x2", "x3", "x4", "x5"});
  std::vector<QPoly> ideal;
  std::vector<std::pair<std::string, std::vector<QPoly>>> primes;
};

inline ScrollExample scroll_example() {
  ScrollExample s;
  s.ideal = Ps({"x1^4 - 2*x0*x1^2*x2 + x0^2*x2^2 + x1*x2*x3*x4 - x0*x2*x4^2 - x1^2*x3*x5 + x0*x1*x4*x5",
                "x1^4 - 2*x0*x1^2*x2 + x0^2*x2^2 + x1*x2*x3*x4 - x1^2*x4^2 - x0*x2*x3*x5 + x0*x1*x4*x5",
                "x2^2*x3*x4 - x1*x2*x4^2 + x4^4 - x1*x2*x3*x5 + x1^2*x4*x5 - 2*x3*x4^2*x5 + x3^2*x5^2"},
               s.ring);
  s.primes.push_back({"P1", Ps({"x1", "x2", "x3*x5 - x4^2"}, s.ring)});
  s.primes.push_back({"P2", Ps({"x1", "x0", "x2^2*x3*x4 + x4^4 - 2*x3*x4^2*x5 + x3^2*x5^2"}, s.ring)});
  s.primes.push_back({"P3", Ps({"x4", "x3", "x0*x2 - x1^2"}, s.ring)});
  s.primes.push_back({"P4", Ps({"x4", "x5", "x0*x2 - x1^2"}, s.ring)});
  s.primes.push_back({"P5", Ps({"x0*x2 - x1^2", "x1*x3 - x0*x4", "x2*x3 - x1*x4", "x1*x5 - x2*x4",
                                "x0*x5 - x1*x4", "x3*x5 - x4^2"},
                               s.ring)});
  return s;
}

// The K3 carpet on the rational normal scroll S(3,3): the ideal J of the
// double structure and a complete intersection of five random integer
// combinations of its generators.
struct CarpetExample {
  VariableRing ring = VariableRing({"x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"});
  std::vector<QPoly> carpet;
  std::vector<QPoly> ideal;
  std::vector<std::size_t> independent;  // x0, x3, y3
};

inline CarpetExample carpet_example(std::uint64_t seed = 2024) {
  CarpetExample c;
  c.carpet = Ps({"x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3", "x2*y0 - 2*x1*y1 + x0*y2", "x3*y0 - 2*x2*y1 + x1*y2",
                 "x2*y1 - 2*x1*y2 + x0*y3", "x3*y1 - 2*x2*y2 + x1*y3", "y1^2 - y0*y2", "y1*y2 - y0*y3",
                 "y2^2 - y1*y3"},
                c.ring);
  Rng rng(seed);
  for (int k = 0; k < 5; ++k) {
    QPoly g(c.ring.size());
    for (const auto& h : c.carpet) g += h.scaled(Rational(rng.integer(-9, 9)));
    c.ideal.push_back(g);
  }
  c.independent = {0, 3, 7};
  return c;
}

// Points of the scroll: x_i = a r^i, y_i = b r^i.
inline std::vector<WitnessPoint> carpet_points(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<WitnessPoint> pts;
  for (std::size_t k = 0; k < count; ++k) {
    const double a = rng.real(0.5, 1.5), b = rng.real(0.5, 1.5), r = rng.real(0.5, 1.5);
    WitnessPoint p;
    for (int i = 0; i < 4; ++i) p.coords.push_back(a * std::pow(r, i));
    for (int i = 0; i < 4; ++i) p.coords.push_back(b * std::pow(r, i));
    p.component = "scroll";
    pts.push_back(std::move(p));
  }
  return pts;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace noether::testing
