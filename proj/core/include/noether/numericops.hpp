#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noether/linalg.hpp"
#include "noether/ring.hpp"
#include "noether/weyl.hpp"

namespace noether {

struct WitnessPoint {
  std::vector<ApproxComplex> coords;  // one per ring variable
  std::string component;
  std::optional<ApproxComplex> value;  // sampled value, for interpolate
};

// max over generators of |f(p)| / (1 + sum of |term(p)|), a scale-aware
// residual of p against the generators.
double point_residual(const std::vector<QPoly>& generators, std::span<const ApproxComplex> point);

struct NumericOptions {
  double tol = kDefaultTolerance;        // kernel rank threshold
  double point_tol = kDefaultTolerance;  // residual threshold for witness points
  unsigned dmax = 20;                    // Macaulay degree cap
  unsigned interpolation_dmax = 10;      // ansatz degree cap
};

// Specialized operators at one point, as echelon columns over `labels`.
struct PointOperators {
  std::vector<std::size_t> block;
  std::vector<Monomial> labels;
  Eigen::MatrixXcd echelon;        // labels.size() x multiplicity
  std::vector<std::size_t> pivots;  // label index per column
  unsigned degree = 0;
  std::vector<std::size_t> kernel_dimensions;

  std::size_t multiplicity() const noexcept { return static_cast<std::size_t>(echelon.cols()); }
  std::vector<SpecializedOperator> operators() const;
};

// Numeric Macaulay matrix at p: rows x^a t^b f_i with |a + b| < d over all
// variables, columns d_x^g with |g| <= d over the dependent block.
LabeledMatrix<ApproxComplex> numeric_macaulay_matrix(const std::vector<QPoly>& generators, unsigned d,
                                                     std::span<const ApproxComplex> point, const Split& split);

PointOperators noetherian_operators_at_point(const std::vector<QPoly>& generators,
                                             std::span<const ApproxComplex> point, const Split& split,
                                             const NumericOptions& options = {});

// f / g with exact or floating-point rational coefficients.
struct InterpolatedCoefficient {
  QPoly numerator;
  QPoly denominator;
  bool exact = true;      // every coefficient was rationalized
  double residual = 0.0;  // max relative misfit over all points
  bool flagged = false;   // some point lacked the term (value taken as 0)

  ApproxComplex evaluate(std::span<const ApproxComplex> point) const;
  RationalFunction as_rational_function() const { return RationalFunction(numerator, denominator); }
};

// Kernel-based rational interpolation of values[i] at points[i] with the
// given numerator/denominator monomial supports (over the full ring). The
// last two points are held out for validation; p0 is the first of them.
InterpolatedCoefficient rational_interpolation(const std::vector<std::vector<ApproxComplex>>& points,
                                               const std::vector<ApproxComplex>& values,
                                               const std::vector<Monomial>& numerator_support,
                                               const std::vector<Monomial>& denominator_support,
                                               double tol = kDefaultTolerance);

// Tries ansatz degrees 0, 1, ... up to options.interpolation_dmax and returns
// the first fit. Too few points for the next degree raises NeedMorePoints.
InterpolatedCoefficient interpolate_values(const std::vector<std::vector<ApproxComplex>>& coords,
                                           const std::vector<ApproxComplex>& values, const Split& split,
                                           const NumericOptions& options = {}, unsigned* degree_out = nullptr);

struct NumericOperator {
  std::vector<std::size_t> block;
  struct Term {
    Monomial d;
    InterpolatedCoefficient coeff;
  };
  std::vector<Term> terms;  // descending graded lex
  std::size_t nvars = 0;

  WeylOperator<RationalFunction> to_weyl() const;
  SpecializedOperator specialize(std::span<const ApproxComplex> point) const;
};

struct NumericOperatorSet {
  std::size_t nvars = 0;
  Split split;
  std::vector<QPoly> ideal;
  std::vector<NumericOperator> operators;
  std::vector<std::size_t> multiplicities;  // per input point
  unsigned ansatz_degree = 0;               // largest ansatz degree used

  std::size_t multiplicity() const noexcept { return operators.size(); }
};

// Specializes at every point, matches terms by d-monomial across points and
// interpolates each coefficient with growing ansatz degree.
NumericOperatorSet numerical_noetherian_operators(const std::vector<QPoly>& generators,
                                                  const std::vector<WitnessPoint>& points, const Split& split,
                                                  const NumericOptions& options = {});

// Ansatz supports for degree d: all monomials of degree <= d in all
// variables, and all monomials of degree <= d in the independent ones.
std::vector<Monomial> numerator_ansatz(std::size_t nvars, unsigned d);
std::vector<Monomial> denominator_ansatz(const Split& split, unsigned d);

}  // namespace noether
