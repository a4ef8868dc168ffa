#include <benchmark/benchmark.h>

#include "noether/dualspace.hpp"
#include "noether/frontend.hpp"
#include "noether/numericops.hpp"

using namespace noether;

namespace {

std::vector<QPoly> parse_all(std::initializer_list<const char*> texts, const VariableRing& r) {
  std::vector<QPoly> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

void BM_Gcd(benchmark::State& state) {
  const VariableRing r({"x", "y", "z"});
  const QPoly g = parse_polynomial("x^2*y - 3*z + 1", r);
  const QPoly a = g * parse_polynomial("x^3 + y*z^2 - 2", r);
  const QPoly b = g * parse_polynomial("y^3 - x*z + 5", r);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd);

void BM_Buchberger(benchmark::State& state) {
  const VariableRing r({"x0", "x1", "x2", "x3"});
  const auto gens = parse_all({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, r);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::grevlex(), 4));
}
BENCHMARK(BM_Buchberger);

void BM_SymbolicNonRationalPrime(benchmark::State& state) {
  const VariableRing r({"x1", "x2", "x3"});
  const auto ideal = parse_all({"(x1^2 - x3)^2", "x2 - x3*(x1^2 - x3)"}, r);
  const auto prime = parse_all({"x1^2 - x3", "x2"}, r);
  for (auto _ : state) benchmark::DoNotOptimize(noetherian_operators(ideal, prime));
}
BENCHMARK(BM_SymbolicNonRationalPrime)->Unit(benchmark::kMillisecond);

void BM_AtPoint(benchmark::State& state) {
  const VariableRing r({"t", "x", "y"});
  const auto gens = parse_all({"x^2 - t*y", "y^2"}, r);
  const Split split(3, {0});
  const std::vector<ApproxComplex> p{2.0, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(noetherian_operators_at_point(gens, p, split));
}
BENCHMARK(BM_AtPoint)->Unit(benchmark::kMicrosecond);

void BM_Numeric(benchmark::State& state) {
  const VariableRing r({"t", "x", "y"});
  const auto gens = parse_all({"x^2 - t*y", "y^2"}, r);
  std::vector<WitnessPoint> pts;
  for (int k = 1; k <= 8; ++k) pts.push_back({{double(k), 0.0, 0.0}, "", {}});
  for (auto _ : state) benchmark::DoNotOptimize(numerical_noetherian_operators(gens, pts, Split(3, {0})));
}
BENCHMARK(BM_Numeric)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
