#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "noether/linalg.hpp"
#include "noether/quotient_field.hpp"
#include "noether/ring.hpp"
#include "noether/weyl.hpp"

namespace noether {

// Degree-d Macaulay matrix over kappa(PS): rows x^a f_i with |a| < d over the
// dependent variables, columns d^b with |b| <= d, entries <d^b, x^a f_i>.
LabeledMatrix<Kappa> macaulay_matrix(const std::vector<QPoly>& generators, unsigned d,
                                     const std::shared_ptr<const KappaContext>& kappa, const Split& split);

// Kernel of the Macaulay matrix once its dimension has stabilized, in
// reduced column echelon form.
struct DualSpaceBasis {
  std::shared_ptr<const KappaContext> kappa;
  std::vector<std::size_t> block;          // dependent variables
  std::vector<Monomial> labels;            // d-monomials of the final matrix
  std::vector<std::vector<Kappa>> vectors;  // echelon, sorted by pivot
  std::vector<std::size_t> pivots;         // label index of each pivot
  unsigned degree = 0;                     // d at which the dimension stabilized
  std::vector<std::size_t> kernel_dimensions;  // dim K_0, dim K_1, ...

  std::size_t multiplicity() const noexcept { return vectors.size(); }
  // Operator k with coefficients written as Q(t)-combinations of standard
  // monomials, over the full ring.
  WeylOperator<RationalFunction> operator_at(std::size_t k, const Split& split) const;
  WeylOperator<Kappa> kappa_operator(std::size_t k, std::size_t nvars) const;
};

struct SymbolicOptions {
  unsigned dmax = 20;
  // Explicit independent variables; empty optional means choose from GB(P).
  std::optional<std::vector<std::size_t>> independent;
  MonomialOrder ring_order = MonomialOrder::grevlex();
  // Called with every Macaulay matrix built (for debugging dumps).
  std::function<void(unsigned, const LabeledMatrix<Kappa>&)> on_matrix;
};

// Algorithm for zero-dimensional input over K(t): grows d until the kernel
// dimension repeats. I must lie in P (else PrimeNotMinimal).
DualSpaceBasis noetherian_operators_zero(const std::vector<QPoly>& ideal, const std::vector<QPoly>& prime,
                                         const Split& split, const SymbolicOptions& options = {});

// Multiplies by the lcm of the coefficient denominators, divides by the
// content and normalizes to coprime integer coefficients with a positive
// leading coefficient. Denominators involving dependent variables raise
// NotLiftable.
WeylOperator<QPoly> lift_operator(const WeylOperator<RationalFunction>& op, const Split& split);

struct NoetherianOperatorSet {
  std::size_t nvars = 0;
  Split split;
  std::vector<QPoly> ideal;
  std::vector<QPoly> prime;
  std::vector<WeylOperator<RationalFunction>> operators;  // echelon form
  std::vector<WeylOperator<QPoly>> lifted;
  unsigned degree = 0;
  std::vector<std::size_t> kernel_dimensions;

  std::size_t multiplicity() const noexcept { return operators.size(); }
};

// Independent set chosen from the reduced basis of P (lexicographically
// first maximal one), unless given in the options.
Split choose_split(const std::vector<QPoly>& prime, std::size_t nvars, const SymbolicOptions& options);

NoetherianOperatorSet noetherian_operators(const std::vector<QPoly>& ideal, const std::vector<QPoly>& prime,
                                           const SymbolicOptions& options = {});

}  // namespace noether
