#include <doctest.h>
#include <json.hpp>

#include "support.hpp"

using namespace noether;
using namespace noether::testing;

namespace {

std::vector<std::size_t> indices(const VariableRing& r, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(r.require(n));
  return out;
}

}  // namespace

TEST_SUITE("dualspace") {
  TEST_CASE("Macaulay matrices match the SymPy oracle entry by entry") {
    const auto oracle = nlohmann::json::parse(read_text(data_path("oracles.json")));
    for (const auto& c : oracle["macaulay"]) {
      CAPTURE(c["name"].get<std::string>());
      const VariableRing r(c["variables"].get<std::vector<std::string>>());
      const Split split(r.size(), indices(r, c["independent"].get<std::vector<std::string>>()));
      std::vector<QPoly> gens, prime;
      for (const auto& g : c["generators"]) gens.push_back(P(g.get<std::string>(), r));
      for (const auto& g : c["prime"]) prime.push_back(P(g.get<std::string>(), r));
      auto kappa = make_quotient_context(extend_to_fraction_field(prime, split),
                                         RationalFunction(split.independent().size(), Rational(1)));
      const auto m = macaulay_matrix(gens, c["degree"].get<unsigned>(), kappa, split);
      REQUIRE(m.entries.rows * m.entries.cols == c["entries"].size());
      std::size_t matched = 0;
      for (const auto& e : c["entries"]) {
        const Monomial mult(e["multiplier"].get<std::vector<unsigned>>());
        const Monomial col(e["column"].get<std::vector<unsigned>>());
        const auto gen = e["generator"].get<std::size_t>();
        std::size_t row = m.row_labels.size(), column = m.col_labels.size();
        for (std::size_t i = 0; i < m.row_labels.size(); ++i)
          if (m.row_labels[i].multiplier == mult && m.row_labels[i].generator == gen) row = i;
        for (std::size_t j = 0; j < m.col_labels.size(); ++j)
          if (m.col_labels[j] == col) column = j;
        REQUIRE(row < m.row_labels.size());
        REQUIRE(column < m.col_labels.size());
        const Kappa expected = to_kappa(P(e["value"].get<std::string>(), r), *kappa, split);
        CHECK(m.entries(row, column) == expected);
        ++matched;
      }
      CHECK(matched == c["entries"].size());
    }
  }

  TEST_CASE("degree-2 matrix of (x^2) is [[0,0,2],[0,0,0]]") {
    const auto r = ring({"x"});
    const Split split(1, {});
    auto kappa = make_quotient_context(extend_to_fraction_field(Ps({"x"}, r), split), RationalFunction(0, 1));
    const auto m = macaulay_matrix(Ps({"x^2"}, r), 2, kappa, split);
    REQUIRE(m.entries.rows == 2);
    REQUIRE(m.entries.cols == 3);
    const long expected[2][3] = {{0, 0, 2}, {0, 0, 0}};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(m.entries(i, j) == kappa->from_scalar(RationalFunction(0, expected[i][j])));
  }

  TEST_CASE("non-rational-point prime: operators 1 and dx1 + 2*x1*x3*dx2") {
    const auto r = ring({"x1", "x2", "x3"});
    const auto n = noetherian_operators(Ps({"(x1^2 - x3)^2", "x2 - x3*(x1^2 - x3)"}, r), Ps({"x1^2 - x3", "x2"}, r));
    CHECK(n.split.independent() == std::vector<std::size_t>{2});
    REQUIRE(n.multiplicity() == 2);
    const std::vector<std::size_t> block{0, 1};
    CHECK(n.operators[0] == parse_operator("1", r, block));
    CHECK(n.operators[1] == parse_operator("dx1 + 2*x1*x3*dx2", r, block));
    CHECK(n.lifted[1] == parse_polynomial_operator("dx1 + 2*x1*x3*dx2", r, block));
  }

  TEST_CASE("xty: operators, lifts and kernel dimensions") {
    const auto r = ring({"t", "x", "y"});
    SymbolicOptions opts;
    opts.independent = std::vector<std::size_t>{0};
    const auto n = noetherian_operators(Ps({"x^2 - t*y", "y^2"}, r), Ps({"x", "y"}, r), opts);
    const std::vector<std::size_t> block{1, 2};
    REQUIRE(n.multiplicity() == 4);
    CHECK(n.operators[0] == parse_operator("1", r, block));
    CHECK(n.operators[1] == parse_operator("dx", r, block));
    CHECK(n.operators[2] == parse_operator("dx^2 + (2/t)*dy", r, block));
    CHECK(n.operators[3] == parse_operator("dx^3 + (6/t)*dx*dy", r, block));
    CHECK(n.lifted[2] == parse_polynomial_operator("t*dx^2 + 2*dy", r, block));
    CHECK(n.lifted[3] == parse_polynomial_operator("t*dx^3 + 6*dx*dy", r, block));
    CHECK(n.kernel_dimensions == std::vector<std::size_t>{1, 2, 3, 4, 4});
    CHECK(n.degree == 4);
  }

  TEST_CASE("zero-dimensional multiplicity equals the quotient dimension") {
    for (const auto& c : corpus()) {
      if (!c.zero_dimensional || c.points.empty()) continue;
      CAPTURE(c.name);
      const auto n = noetherian_operators(c.ideal, c.prime);
      const auto gb = buchberger(c.ideal, MonomialOrder::grevlex(), c.ring.size());
      CHECK(n.multiplicity() == gb.standard_monomials().size());
      CHECK(n.kernel_dimensions.back() == n.multiplicity());
      CHECK(n.kernel_dimensions[n.kernel_dimensions.size() - 2] == n.multiplicity());
    }
  }

  TEST_CASE("echelon shape of every result") {
    for (const auto& c : corpus()) {
      CAPTURE(c.name);
      const auto n = noetherian_operators(c.ideal, c.prime);
      REQUIRE(n.multiplicity() >= 1);
      // Pivots are distinct leading monomials in ascending order, with a
      // unit coefficient that no other operator shares.
      for (std::size_t k = 0; k < n.operators.size(); ++k) {
        const auto& lead = n.operators[k].leading();
        CHECK(lead.coeff == one_like(lead.coeff));
        if (k > 0) CHECK(grlex_compare(n.operators[k - 1].leading().d, lead.d) < 0);
        for (std::size_t j = 0; j < n.operators.size(); ++j)
          if (j != k) CHECK(n.operators[j].coefficient(lead.d) == nullptr);
      }
      CHECK(n.operators[0] == parse_operator("1", c.ring, n.split.dependent()));
    }
  }

  TEST_CASE("error conditions") {
    const auto r = ring({"x", "y"});
    try {
      (void)noetherian_operators(Ps({"x^2", "y - 1"}, r), Ps({"x", "y"}, r));
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PrimeNotMinimal);
    }
    SymbolicOptions small;
    small.dmax = 2;
    try {
      (void)noetherian_operators(Ps({"x^4", "y^4"}, r), Ps({"x", "y"}, r), small);
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoStabilization);
    }
    SymbolicOptions bad;
    bad.independent = std::vector<std::size_t>{0, 1};
    try {
      (void)noetherian_operators(Ps({"x^2"}, r), Ps({"x"}, r), bad);
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IndependentSetInvalid);
    }
    CHECK_THROWS_AS(noetherian_operators(Ps({"x^2"}, r), Ps({"1"}, r)), Error);
  }

  TEST_CASE("lifting clears denominators") {
    const auto r = ring({"t", "x"});
    const Split split(2, {0});
    const auto op = parse_operator("(1/2)*dx^2 + (3/(t^2 + 1))*dx", r, std::vector<std::size_t>{1});
    CHECK(lift_operator(op, split) ==
          parse_polynomial_operator("(t^2 + 1)*dx^2 + 6*dx", r, std::vector<std::size_t>{1}));
    const auto bad = parse_operator("(1/x)*dx", r, std::vector<std::size_t>{1});
    CHECK_THROWS_AS(lift_operator(bad, split), Error);
  }

  TEST_CASE("matrix callback sees every degree") {
    const auto r = ring({"x", "y"});
    std::vector<unsigned> seen;
    SymbolicOptions opts;
    opts.on_matrix = [&](unsigned d, const LabeledMatrix<Kappa>& m) {
      seen.push_back(d);
      CHECK(m.col_labels.size() == d_monomials(2, d).size());
    };
    (void)noetherian_operators(Ps({"x^2", "x*y", "y^2"}, r), Ps({"x", "y"}, r), opts);
    CHECK(seen == std::vector<unsigned>{1, 2});
  }
}
