#include <doctest.h>
#include <json.hpp>

#include "support.hpp"

using namespace noether;
using namespace noether::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::InvalidInput;
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("frontend") {
  TEST_CASE("polynomial grammar") {
    const auto r = ring({"x", "y", "t1"});
    CHECK(P("-x^2 + 3*x*y - 1/2", r) == P("(x - y)*(-x) + 2*x*y - 0.5", r));
    CHECK(P("2^3*x", r) == P("8*x", r));
    CHECK(P("-(-x)", r) == P("x", r));
    CHECK(P("x/2 + t1/4", r) == P("0.5*x + 0.25*t1", r));
    CHECK(P("(x + y)^0", r) == P("1", r));
    CHECK(P("1e2*y", r) == P("100*y", r));
    CHECK(P("  x  ", r) == P("x", r));
  }

  TEST_CASE("parse errors carry positions and kinds") {
    const auto r = ring({"x", "y"});
    CHECK(kind_of([&] { P("x + z", r); }) == ErrorKind::UnknownVariable);
    CHECK(message_of([&] { P("x + z", r); }).find("line 1, column 5") != std::string::npos);
    CHECK(kind_of([&] { P("2 x", r); }) == ErrorKind::ParseError);
    CHECK(message_of([&] { P("2 x", r); }).find("missing '*'") != std::string::npos);
    CHECK(kind_of([&] { P("x +", r); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { P("(x", r); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { P("x)", r); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { P("x/0", r); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { P("1/x", r); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { P("x^-1", r); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { P("x^100000", r); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { P("dx", r); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { P("", r); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { P("x $ y", r); }) == ErrorKind::ParseError);
    const SourcePos origin{3, 5};
    CHECK(message_of([&] { parse_polynomial("\n  w", r, origin); }).find("line 4, column 3") != std::string::npos);
  }

  TEST_CASE("rational functions and operators") {
    const auto r = ring({"t", "x"});
    CHECK(parse_rational_function("(t^2 - 1)/(t - 1)", r) == RationalFunction(P("t + 1", r)));
    CHECK(parse_rational_function("t^-2", r) == RationalFunction(P("1", r), P("t^2", r)));
    const auto op = parse_operator("dx^2 + (2/t)*dx - dx*t", r);
    CHECK(op.block() == std::vector<std::size_t>{0, 1});
    CHECK(op.terms().size() == 2);
    CHECK(kind_of([&] { parse_operator("1/dx", r); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse_polynomial_operator("(1/t)*dx", r); }) == ErrorKind::NotLiftable);
    CHECK(kind_of([&] { parse_operator("dt", r, std::vector<std::size_t>{1}); }) == ErrorKind::InvalidInput);
    // A ring variable named like a derivative takes precedence.
    const auto r2 = ring({"x", "dx"});
    CHECK(P("dx*x", r2).terms().front().mono == Monomial{1, 1});
  }

  TEST_CASE("variable lists and matrices") {
    const auto r = ring({"a", "b", "c"});
    CHECK(parse_variable_list("c, a", r) == std::vector<std::size_t>{0, 2});
    CHECK(parse_variable_list("", r).empty());
    CHECK(kind_of([&] { parse_variable_list("a, a", r); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_variable_list("a, q", r); }) == ErrorKind::UnknownVariable);
    const auto m = parse_rational_matrix("1, 2; 1/2 0.25");
    REQUIRE(m.size() == 2);
    CHECK(m[1] == std::vector<Rational>{Rational(1, 2), Rational(1, 4)});
    CHECK(kind_of([&] { parse_rational_matrix("1, 2; 3"); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { parse_rational_matrix("1, x; 0, 1"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("rendering") {
    const auto r = ring({"t", "x", "y"});
    CHECK(render_polynomial(P("x^2 - t*y", r), r) == "x^2 - t*y");
    CHECK(render_polynomial(QPoly(3), r) == "0");
    CHECK(render_polynomial(P("-1/2*x + 3", r), r) == "-1/2*x + 3");
    CHECK(render_rational(Rational(-3, 4)) == "-3/4");
    const auto f = parse_rational_function("(x + 1)/(2*t)", r);
    CHECK(render_rational_function(f, r) == "(1/2*x + 1/2)/t");
    CHECK(parse_rational_function(render_rational_function(f, r), r) == f);
    const std::vector<std::size_t> block{1, 2};
    CHECK(render_operator(parse_operator("dx^2 + (2/t)*dy", r, block), r) == "dx^2 + (2/t)*dy");
    CHECK(render_operator(parse_polynomial_operator("t*dx^3 + 6*dx*dy", r, block), r) == "t*dx^3 + 6*dx*dy");
    CHECK(render_operator(parse_operator("1", r, block), r) == "1");
    CHECK(render_operator(parse_operator("-dx", r, block), r) == "-dx");
    SpecializedOperator s{block, {{Monomial{2, 0}, {1.0, 0.0}}, {Monomial{0, 1}, {0.5, 0.0}}}};
    CHECK(render_operator(s, r) == "dx^2 + 0.5*dy");
  }

  TEST_CASE("problem files") {
    const auto p = parse_problem(read_text(data_path("xty.txt")));
    CHECK(p.has_ring);
    CHECK(p.ring.names() == std::vector<std::string>{"t", "x", "y"});
    CHECK(p.independent == std::optional<std::vector<std::size_t>>(std::vector<std::size_t>{0}));
    CHECK(p.ideal == Ps({"x^2 - t*y", "y^2"}, p.ring));
    CHECK(p.prime == Ps({"x", "y"}, p.ring));

    const auto q = parse_problem(read_text(data_path("q.txt")));
    CHECK(q.ideal.size() == 2);
    CHECK_FALSE(q.independent.has_value());

    const auto bare = parse_problem(read_text(data_path("p.txt")), &q.ring);
    CHECK_FALSE(bare.has_ring);
    CHECK(bare.ideal == Ps({"x1^2 - x3", "x2"}, q.ring));
    CHECK(kind_of([&] { parse_problem(read_text(data_path("p.txt"))); }) == ErrorKind::ParseError);

    const auto opts = parse_problem("ring: x\nideal: x^2\ndmax: 7\n# note\ntol: 1e-6\n");
    CHECK(opts.option("dmax") == std::optional<std::string>("7"));
    CHECK(opts.option("tol") == std::optional<std::string>("1e-6"));
    CHECK_FALSE(opts.option("order").has_value());

    const auto lines = parse_problem("ring: x, y\nideal:\n  x^2 +\n  y^2\n  x*y\n");
    CHECK(lines.ideal == Ps({"x^2 + y^2", "x*y"}, lines.ring));

    CHECK(kind_of([&] { parse_problem("ring: x\nring: y\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse_problem("ring: x\nideal: x, q\n"); }) == ErrorKind::UnknownVariable);
    CHECK(message_of([&] { parse_problem("ring: x\nideal:\n  x,\n  x +\n"); }).find("line") != std::string::npos);
    const auto none = parse_problem("ring: x, y\nindep: none\nideal: x\n");
    CHECK(none.independent == std::optional<std::vector<std::size_t>>(std::vector<std::size_t>{}));
  }

  TEST_CASE("witness files") {
    const auto w = parse_witness_json(read_text(data_path("p1.json")));
    CHECK(w.variables == std::vector<std::string>{"t", "x", "y"});
    REQUIRE(w.points.size() == 4);
    CHECK(w.points[2].coords[0] == ApproxComplex(3.0, 0.0));
    CHECK(w.points[0].component == "1");
    const auto back = parse_witness_json(witness_json(w));
    CHECK(back.points.size() == 4);
    CHECK(back.points[3].coords == w.points[3].coords);
    const auto cx = parse_witness_json(R"({"points": [{"coords": [[1, 2], 3], "value": [0.5, -1]}]})");
    CHECK(cx.points[0].coords[0] == ApproxComplex(1.0, 2.0));
    CHECK(cx.points[0].value == std::optional<ApproxComplex>(ApproxComplex(0.5, -1.0)));
    CHECK(kind_of([&] { parse_witness_json("{"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse_witness_json(R"({"points": [{"coords": ["a"]}]})"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse_witness_json(R"({"pts": []})"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("JSON documents") {
    const auto r = ring({"t", "x", "y"});
    SymbolicOptions opts;
    opts.independent = std::vector<std::size_t>{0};
    const auto n = noetherian_operators(Ps({"x^2 - t*y", "y^2"}, r), Ps({"x", "y"}, r), opts);
    const auto j = nlohmann::json::parse(symbolic_json(n, r));
    CHECK(j["schema"] == 1);
    CHECK(j["multiplicity"] == 4);
    CHECK(j["operators"][2] == "dx^2 + (2/t)*dy");
    CHECK(j["lifted"][2] == "t*dx^2 + 2*dy");
    CHECK(j["independent_vars"] == nlohmann::json::array({"t"}));
    CHECK(j["kernel_dimensions"] == nlohmann::json::array({1, 2, 3, 4, 4}));

    const auto e = nlohmann::json::parse(error_json(Error(ErrorKind::NotOnVariety, "bad point")));
    CHECK(e["error"]["kind"] == "NotOnVariety");
    CHECK(e["error"]["message"] == "bad point");

    const auto l = nlohmann::json::parse(polynomial_list_json("images", Ps({"4*y"}, r), r));
    CHECK(l["images"][0] == "4*y");
  }
}
