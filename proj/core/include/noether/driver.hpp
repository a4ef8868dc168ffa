#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noether/dualspace.hpp"
#include "noether/numericops.hpp"

namespace noether {

// One primary component: its witness points and whichever operator set is
// available for it.
struct ComponentDescription {
  std::string id;
  std::vector<WitnessPoint> points;
  std::optional<NumericOperatorSet> numeric;
  std::optional<NoetherianOperatorSet> symbolic;
  std::vector<QPoly> prime;  // optional exact generators
  std::string error;         // set when the component could not be processed

  // Operators specialized at a point, from the symbolic set if present.
  std::vector<SpecializedOperator> specialized_at(std::span<const ApproxComplex> point) const;
  std::size_t multiplicity() const;
};

struct MembershipResult {
  std::vector<bool> per_component;
  std::vector<double> worst;  // largest relative |(D f)(p)| per component
  bool member = true;         // AND over components
};

// f is declared a member of a component when every operator kills f at the
// first `trials` points, relative to the size of the terms involved.
MembershipResult membership_test(const QPoly& f, const std::vector<ComponentDescription>& components,
                                 std::size_t trials = 3, double tol = 1e-6);

struct WitnessGroup {
  std::string id;
  std::vector<WitnessPoint> points;
};

// Runs the numerical operator pipeline once per witness group. Failures are
// recorded in the component's `error` and do not stop the others.
std::vector<ComponentDescription> numerical_primary_decomposition(const std::vector<QPoly>& generators,
                                                                  const std::vector<WitnessGroup>& witness,
                                                                  const Split& split,
                                                                  const NumericOptions& options = {});

using RationalMatrix = std::vector<std::vector<Rational>>;

// Inverse of a square rational matrix; singular input raises SingularChange.
RationalMatrix invert(const RationalMatrix& a);

// phi(f)(x) = f(A x).
QPoly substitute(const QPoly& f, const RationalMatrix& a);

// psi(D): coefficients c(x) -> c(A x), d_i -> sum_k (A^-1)_{k i} d_k. The
// result differentiates every variable.
WeylOperator<QPoly> transform_operator(const WeylOperator<QPoly>& op, const RationalMatrix& a);
std::vector<WeylOperator<QPoly>> transform_operators(const std::vector<WeylOperator<QPoly>>& ops,
                                                     const RationalMatrix& a);

// N(G): every nonzero D g.
std::vector<QPoly> apply_to_generators(const std::vector<WeylOperator<QPoly>>& ops, const std::vector<QPoly>& g);

}  // namespace noether
