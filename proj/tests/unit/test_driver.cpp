#include <doctest.h>

#include "support.hpp"

using namespace noether;
using namespace noether::testing;

namespace {

WitnessPoint point(std::vector<double> xs, std::string comp = {}) {
  WitnessPoint p;
  for (double x : xs) p.coords.emplace_back(x, 0.0);
  p.component = std::move(comp);
  return p;
}

// (x^2 - t*y, y^2) times (x - 1, y): comaximal, so the product is the
// intersection, with multiplicities 4 and 1.
struct TwoComponents {
  VariableRing r = VariableRing({"t", "x", "y"});
  std::vector<QPoly> gens;
  std::vector<WitnessGroup> witness;
};

TwoComponents two_components() {
  TwoComponents c;
  c.gens = Ps({"(x^2 - t*y)*(x - 1)", "(x^2 - t*y)*y", "y^2*(x - 1)", "y^3"}, c.r);
  WitnessGroup a{"A", {}}, b{"B", {}};
  for (int k = 1; k <= 8; ++k) {
    a.points.push_back(point({double(k), 0, 0}, "A"));
    b.points.push_back(point({double(k) + 0.5, 1, 0}, "B"));
  }
  c.witness = {a, b};
  return c;
}

}  // namespace

TEST_SUITE("driver") {
  TEST_CASE("numerical primary decomposition over witness groups") {
    const auto c = two_components();
    const auto comps = numerical_primary_decomposition(c.gens, c.witness, Split(3, {0}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].error.empty());
    CHECK(comps[1].error.empty());
    CHECK(comps[0].multiplicity() == 4);
    CHECK(comps[1].multiplicity() == 1);
    const std::vector<std::size_t> block{1, 2};
    CHECK(comps[0].numeric->operators[2].to_weyl() == parse_operator("dx^2 + (2/t)*dy", c.r, block));
  }

  TEST_CASE("a failing component does not stop the others") {
    auto c = two_components();
    c.witness[1].points.resize(2);
    c.witness[1].points[0].coords[1] = {3.0, 0.0};  // off the variety
    const auto comps = numerical_primary_decomposition(c.gens, c.witness, Split(3, {0}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].error.empty());
    CHECK_FALSE(comps[1].error.empty());
    CHECK(comps[1].error.rfind("NotOnVariety", 0) == 0);
  }

  TEST_CASE("membership test") {
    const auto c = two_components();
    const auto comps = numerical_primary_decomposition(c.gens, c.witness, Split(3, {0}));
    const auto member = membership_test(P("(x^2 - t*y)*(x - 1) + 5*y^3 - t*x*y^2*(x - 1)", c.r), comps);
    CHECK(member.member);
    CHECK(member.per_component == std::vector<bool>{true, true});
    const auto partial = membership_test(P("x^2 - t*y", c.r), comps);
    CHECK_FALSE(partial.member);
    CHECK(partial.per_component == std::vector<bool>{true, false});
    CHECK(partial.worst[1] > 1e-3);
    const auto none = membership_test(P("x + y", c.r), comps);
    CHECK(none.per_component == std::vector<bool>{false, false});
    CHECK_THROWS_AS(membership_test(P("x", c.r), comps, 20), Error);
  }

  TEST_CASE("membership with symbolic operators") {
    const auto r = ring({"t", "x", "y"});
    ComponentDescription comp;
    comp.id = "sym";
    SymbolicOptions opts;
    opts.independent = std::vector<std::size_t>{0};
    comp.symbolic = noetherian_operators(Ps({"x^2 - t*y", "y^2"}, r), Ps({"x", "y"}, r), opts);
    for (int k = 1; k <= 3; ++k) comp.points.push_back(point({double(k), 0, 0}));
    CHECK(membership_test(P("t*x*y^2 + (x + 1)*(x^2 - t*y)", r), {comp}).member);
    CHECK_FALSE(membership_test(P("x*y", r), {comp}).member);
  }

  TEST_CASE("matrix inverse") {
    const RationalMatrix a{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    const RationalMatrix inv = invert(a);
    CHECK(inv == RationalMatrix{{Rational(1), Rational(-1)}, {Rational(-1), Rational(2)}});
    try {
      (void)invert(RationalMatrix{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SingularChange);
    }
    CHECK_THROWS_AS(invert(RationalMatrix{{Rational(1), Rational(2)}}), Error);
  }

  TEST_CASE("linear substitution") {
    const auto r = ring({"x", "y"});
    const RationalMatrix a{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    // f(x + y, y).
    CHECK(substitute(P("x^2 - y", r), a) == P("x^2 + 2*x*y + y^2 - y", r));
    CHECK(substitute(P("x", r), invert(a)) == P("x - y", r));
  }

  TEST_CASE("transport of operators") {
    const auto r = ring({"x", "y"});
    const RationalMatrix swap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    const auto ops = transform_operators({parse_polynomial_operator("1", r), parse_polynomial_operator("dx", r)}, swap);
    CHECK(ops[1] == parse_polynomial_operator("dy", r));
    const RationalMatrix shear{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}};
    // With g(x) = f(Ax): (d_x f)(Ax) = d_x g and (d_y f)(Ax) = d_y g - 2 d_x g.
    CHECK(transform_operator(parse_polynomial_operator("y*dy", r), shear) ==
          parse_polynomial_operator("y*dy - 2*y*dx", r));
    // A block-restricted operator is widened to every variable.
    const auto rt = ring({"t", "x"});
    const auto d = parse_polynomial_operator("t*dx", rt, std::vector<std::size_t>{1});
    const RationalMatrix id{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK(transform_operator(d, id).block() == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("N(G) drops zero images") {
    const auto r = ring({"t", "x", "y"});
    const std::vector<std::size_t> block{1, 2};
    const auto ops = std::vector{parse_polynomial_operator("t*dx^2 + 2*dy", r, block),
                                 parse_polynomial_operator("dx", r, block)};
    const auto images = apply_to_generators(ops, Ps({"x^2 - t*y", "y^2"}, r));
    CHECK(images == Ps({"4*y", "2*x"}, r));
  }
}
