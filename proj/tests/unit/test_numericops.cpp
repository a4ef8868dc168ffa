#include <doctest.h>

#include "support.hpp"

using namespace noether;
using namespace noether::testing;

namespace {

WitnessPoint point(std::vector<double> xs) {
  WitnessPoint p;
  for (double x : xs) p.coords.emplace_back(x, 0.0);
  return p;
}

double max_diff(const SpecializedOperator& a, const SpecializedOperator& b) {
  double worst = 0.0;
  for (const auto& t : a.terms) {
    const auto* c = b.coefficient(t.d);
    worst = std::max(worst, std::abs(t.coeff - (c ? *c : ApproxComplex{})));
  }
  for (const auto& t : b.terms)
    if (!a.coefficient(t.d)) worst = std::max(worst, std::abs(t.coeff));
  return worst;
}

}  // namespace

TEST_SUITE("numericops") {
  TEST_CASE("point residual is scale aware") {
    const auto r = ring({"x", "y"});
    const auto gens = Ps({"x^2 - y", "1000*x - 1000"}, r);
    const auto on = point({1.0, 1.0});
    CHECK(point_residual(gens, on.coords) == 0.0);
    const auto off = point({1.0 + 1e-9, 1.0});
    CHECK(point_residual(gens, off.coords) < 1e-8);
    CHECK(point_residual(gens, point({2.0, 1.0}).coords) > 0.1);
  }

  TEST_CASE("numeric Macaulay matrix shape") {
    const auto r = ring({"t", "x", "y"});
    const Split split(3, {0});
    const auto m = numeric_macaulay_matrix(Ps({"x^2 - t*y", "y^2"}, r), 2, point({2, 0, 0}).coords, split);
    // Rows: 2 generators times the 4 monomials of degree < 2 in all 3 variables.
    CHECK(m.entries.rows == 8);
    CHECK(m.entries.cols == 6);
    CHECK(m.block == std::vector<std::size_t>{1, 2});
  }

  TEST_CASE("operators at points of xty agree with the symbolic ones") {
    const auto r = ring({"t", "x", "y"});
    const auto ideal = Ps({"x^2 - t*y", "y^2"}, r);
    SymbolicOptions sopts;
    sopts.independent = std::vector<std::size_t>{0};
    const auto sym = noetherian_operators(ideal, Ps({"x", "y"}, r), sopts);
    for (int t = 1; t <= 4; ++t) {
      const auto p = point({double(t), 0, 0});
      const auto at = noetherian_operators_at_point(ideal, p.coords, sym.split);
      REQUIRE(at.multiplicity() == 4);
      CHECK(at.kernel_dimensions == std::vector<std::size_t>{1, 2, 3, 4, 4});
      const auto ops = at.operators();
      for (std::size_t k = 0; k < 4; ++k) CHECK(max_diff(ops[k], specialize(sym.operators[k], p.coords)) < 1e-9);
    }
  }

  TEST_CASE("points off the variety are rejected") {
    const auto r = ring({"t", "x", "y"});
    const Split split(3, {0});
    try {
      (void)noetherian_operators_at_point(Ps({"x^2 - t*y", "y^2"}, r), point({1, 0.5, 0}).coords, split);
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotOnVariety);
    }
  }

  TEST_CASE("rational interpolation recovers exact coefficients") {
    const auto r = ring({"t"});
    const RationalFunction f(P("2*t + 1", r), P("t^2 + 3", r));
    std::vector<std::vector<ApproxComplex>> coords;
    std::vector<ApproxComplex> values;
    for (int k = 0; k < 12; ++k) {
      const double t = 0.3 + 0.37 * k;
      coords.push_back({{t, 0.0}});
      values.push_back(f.evaluate(std::span<const ApproxComplex>(coords.back())));
    }
    const Split split(1, {0});
    unsigned degree = 0;
    const auto c = interpolate_values(coords, values, split, {}, &degree);
    CHECK(degree == 2);
    CHECK(c.exact);
    CHECK(c.as_rational_function() == f);
    CHECK(c.residual < 1e-9);
  }

  TEST_CASE("interpolation needs enough points") {
    const auto r = ring({"t"});
    const RationalFunction f(P("t^3 + 1", r), P("t - 7", r));
    std::vector<std::vector<ApproxComplex>> coords;
    std::vector<ApproxComplex> values;
    for (int k = 0; k < 4; ++k) {
      coords.push_back({{1.0 + k, 0.0}});
      values.push_back(f.evaluate(std::span<const ApproxComplex>(coords.back())));
    }
    try {
      (void)interpolate_values(coords, values, Split(1, {0}));
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NeedMorePoints);
    }
  }

  TEST_CASE("ansatz supports") {
    const Split split(3, {0});
    CHECK(numerator_ansatz(3, 2).size() == 10);
    CHECK(denominator_ansatz(split, 2).size() == 3);
    for (const auto& m : denominator_ansatz(split, 3)) CHECK((m[1] == 0 && m[2] == 0));
  }

  TEST_CASE("numeric pipeline on xty recovers 2/t and 6/t") {
    const auto r = ring({"t", "x", "y"});
    std::vector<WitnessPoint> pts;
    for (int k = 1; k <= 8; ++k) pts.push_back(point({double(k), 0, 0}));
    const auto n = numerical_noetherian_operators(Ps({"x^2 - t*y", "y^2"}, r), pts, Split(3, {0}));
    REQUIRE(n.multiplicity() == 4);
    const std::vector<std::size_t> block{1, 2};
    CHECK(n.operators[2].to_weyl() == parse_operator("dx^2 + (2/t)*dy", r, block));
    CHECK(n.operators[3].to_weyl() == parse_operator("dx^3 + (6/t)*dx*dy", r, block));
    for (const auto& op : n.operators)
      for (const auto& t : op.terms) {
        CHECK(t.coeff.exact);
        CHECK_FALSE(t.coeff.flagged);
      }
  }

  TEST_CASE("numeric pipeline on a non-rational-point prime") {
    const auto r = ring({"x1", "x2", "x3"});
    const auto ideal = Ps({"(x1^2 - x3)^2", "x2 - x3*(x1^2 - x3)"}, r);
    Rng rng(3);
    std::vector<WitnessPoint> pts;
    for (int k = 0; k < 24; ++k) {
      const double a = rng.real(0.5, 2.0) * (k % 2 ? 1 : -1);
      pts.push_back(point({a, 0.0, a * a}));
    }
    const auto n = numerical_noetherian_operators(ideal, pts, Split(3, {2}));
    REQUIRE(n.multiplicity() == 2);
    // The numerator ansatz sees x1 and x3 on the variety, so compare values
    // at fresh points rather than coefficients.
    const auto sym = noetherian_operators(ideal, Ps({"x1^2 - x3", "x2"}, r));
    for (int k = 0; k < 5; ++k) {
      const double a = rng.real(0.5, 2.0);
      const auto p = point({a, 0.0, a * a});
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(max_diff(n.operators[j].specialize(p.coords), specialize(sym.operators[j], p.coords)) < 1e-7);
    }
  }

  TEST_CASE("inconsistent specializations are reported") {
    const auto r = ring({"t", "x"});
    // Multiplicity 2 at t != 0 and 3 at t = 0.
    std::vector<WitnessPoint> pts{point({0, 0}), point({1, 0}), point({2, 0}), point({3, 0})};
    try {
      (void)numerical_noetherian_operators(Ps({"x^2 * (x - t)"}, r), pts, Split(2, {0}));
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InconsistentSpecializations);
    }
  }
}
