#include "noether/dualspace.hpp"

namespace noether {
namespace {

// Macaulay matrix grown degree by degree. Rows and columns of degree d are
// prefixes of those of degree d + 1, so entries are computed once.
class MacaulayBuilder {
 public:
  MacaulayBuilder(const std::vector<QPoly>& gens, std::shared_ptr<const KappaContext> kappa, const Split& split)
      : gens_(gens), kappa_(std::move(kappa)), split_(split) {}

  const LabeledMatrix<Kappa>& grow_to(unsigned d) {
    const std::size_t nx = split_.dependent().size();
    const auto cols = d_monomials(nx, d);
    const auto mults = d >= 1 ? d_monomials(nx, d - 1) : std::vector<Monomial>{};
    const std::size_t old_cols = cols_.size();

    // New columns for existing rows.
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = old_cols; c < cols.size(); ++c) entries_[r].push_back(entry(polys_[r], cols[c]));
    cols_ = cols;

    // New rows.
    for (std::size_t m = rows_.size() / std::max<std::size_t>(gens_.size(), 1); m < mults.size(); ++m) {
      const Monomial full = split_.x_to_full(mults[m]);
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        QPoly g = gens_[i].mul_monomial(full);
        std::vector<Kappa> row;
        row.reserve(cols_.size());
        for (const auto& c : cols_) row.push_back(entry(g, c));
        rows_.push_back({full, i});
        polys_.push_back(std::move(g));
        entries_.push_back(std::move(row));
      }
    }

    matrix_.block = split_.dependent();
    matrix_.col_labels = cols_;
    matrix_.row_labels = rows_;
    matrix_.entries = DenseMatrix<Kappa>(rows_.size(), cols_.size(), kappa_->zero());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < cols_.size(); ++c) matrix_.entries(r, c) = entries_[r][c];
    return matrix_;
  }

 private:
  Kappa entry(const QPoly& g, const Monomial& beta) const {
    if (beta.degree() > g.total_degree()) return kappa_->zero();
    QPoly dg = g.derivative(beta, split_.dependent());
    if (dg.is_zero()) return kappa_->zero();
    return to_kappa(dg, *kappa_, split_);
  }

  const std::vector<QPoly>& gens_;
  std::shared_ptr<const KappaContext> kappa_;
  const Split& split_;
  std::vector<Monomial> cols_;
  std::vector<LabeledMatrix<Kappa>::RowLabel> rows_;
  std::vector<QPoly> polys_;
  std::vector<std::vector<Kappa>> entries_;
  LabeledMatrix<Kappa> matrix_;
};

std::size_t common_nvars(const std::vector<QPoly>& ideal, const std::vector<QPoly>& prime) {
  if (ideal.empty()) fail(ErrorKind::InvalidInput, "the ideal has no generators");
  if (prime.empty()) fail(ErrorKind::InvalidInput, "the prime has no generators");
  const std::size_t n = ideal.front().nvars();
  for (const auto& p : ideal)
    if (p.nvars() != n) fail(ErrorKind::ContextMismatch, "ideal generators from different rings");
  for (const auto& p : prime)
    if (p.nvars() != n) fail(ErrorKind::ContextMismatch, "prime and ideal rings differ");
  return n;
}

}  // namespace

LabeledMatrix<Kappa> macaulay_matrix(const std::vector<QPoly>& generators, unsigned d,
                                     const std::shared_ptr<const KappaContext>& kappa, const Split& split) {
  MacaulayBuilder b(generators, kappa, split);
  return b.grow_to(d);
}

WeylOperator<Kappa> DualSpaceBasis::kappa_operator(std::size_t k, std::size_t nvars) const {
  WeylOperator<Kappa> op(nvars, block);
  for (std::size_t j = 0; j < labels.size(); ++j) op.add_term(labels[j], vectors.at(k)[j]);
  return op;
}

WeylOperator<RationalFunction> DualSpaceBasis::operator_at(std::size_t k, const Split& split) const {
  const std::size_t n = split.nvars();
  WeylOperator<RationalFunction> op(n, block);
  const auto& basis = kappa->basis();
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const auto& coords = vectors.at(k)[j].coordinates();
    RationalFunction c(n);
    for (std::size_t b = 0; b < coords.size(); ++b) {
      if (coords[b].is_zero()) continue;
      const RationalFunction mono(QPoly::term(split.x_to_full(basis[b]), Rational(1)));
      c += split.t_to_full(coords[b]) * mono;
    }
    op.add_term(labels[j], std::move(c));
  }
  return op;
}

DualSpaceBasis noetherian_operators_zero(const std::vector<QPoly>& ideal, const std::vector<QPoly>& prime,
                                         const Split& split, const SymbolicOptions& options) {
  common_nvars(ideal, prime);
  auto gb = extend_to_fraction_field(prime, split);
  auto kappa = make_quotient_context(std::move(gb), RationalFunction(split.independent().size(), Rational(1)));

  for (const auto& f : ideal)
    if (!to_kappa(f, *kappa, split).is_zero())
      fail(ErrorKind::PrimeNotMinimal, "the ideal is not contained in the given prime");

  DualSpaceBasis out;
  out.kappa = kappa;
  out.block = split.dependent();
  out.kernel_dimensions.push_back(1);

  MacaulayBuilder builder(ideal, kappa, split);
  const Kappa zero = kappa->zero(), one = kappa->one();
  for (unsigned d = 1; d <= options.dmax; ++d) {
    const auto& m = builder.grow_to(d);
    if (options.on_matrix) options.on_matrix(d, m);
    auto kernel = exact_kernel(m.entries, zero, one);
    out.kernel_dimensions.push_back(kernel.size());
    if (kernel.size() == out.kernel_dimensions[d - 1]) {
      out.degree = d;
      out.labels = m.col_labels;
      out.vectors = reduced_column_echelon(std::move(kernel), m.col_labels, one, &out.pivots);
      return out;
    }
  }
  fail(ErrorKind::NoStabilization,
       "kernel dimension still growing at degree " + std::to_string(options.dmax) +
           "; the prime may not be minimal over the ideal");
}

WeylOperator<QPoly> lift_operator(const WeylOperator<RationalFunction>& op, const Split& split) {
  const std::size_t n = op.nvars();
  WeylOperator<QPoly> out(n, op.block());
  if (op.is_zero()) return out;

  QPoly l = QPoly::constant(n, Rational(1));
  for (const auto& t : op.terms()) {
    const QPoly& den = t.coeff.denominator();
    const auto occ = occurring_variables(den);
    for (std::size_t v = 0; v < n; ++v)
      if (occ[v] && !split.is_independent(v))
        fail(ErrorKind::NotLiftable, "coefficient denominator involves a dependent variable");
    if (!den.is_constant()) l = *divide_exact(l * den, gcd(l, den));
  }
  std::vector<QPoly> coeffs;
  for (const auto& t : op.terms()) coeffs.push_back(t.coeff.numerator() * *divide_exact(l, t.coeff.denominator()));

  QPoly g(n);
  for (const auto& c : coeffs) {
    g = g.is_zero() ? make_monic(c) : gcd(g, c);
    if (g.is_constant()) break;
  }
  if (!g.is_constant())
    for (auto& c : coeffs) c = *divide_exact(c, g);

  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& c : coeffs)
    for (const auto& t : c.terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.value().get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.value().get_num_mpz_t());
    }
  Rational factor(den_lcm, num_gcd);
  if (coeffs.front().leading().coeff.sign() < 0) factor = -factor;
  for (std::size_t k = 0; k < coeffs.size(); ++k) out.add_term(op.terms()[k].d, coeffs[k].scaled(factor));
  return out;
}

Split choose_split(const std::vector<QPoly>& prime, std::size_t nvars, const SymbolicOptions& options) {
  if (options.independent) return Split(nvars, *options.independent);
  auto gb = buchberger(prime, options.ring_order, nvars);
  return Split(nvars, dimension_and_independent_set(gb).independent);
}

NoetherianOperatorSet noetherian_operators(const std::vector<QPoly>& ideal, const std::vector<QPoly>& prime,
                                           const SymbolicOptions& options) {
  const std::size_t n = common_nvars(ideal, prime);
  NoetherianOperatorSet out;
  out.nvars = n;
  out.split = choose_split(prime, n, options);
  out.ideal = ideal;
  out.prime = prime;
  const auto basis = noetherian_operators_zero(ideal, prime, out.split, options);
  out.degree = basis.degree;
  out.kernel_dimensions = basis.kernel_dimensions;
  for (std::size_t k = 0; k < basis.multiplicity(); ++k) {
    out.operators.push_back(basis.operator_at(k, out.split));
    out.lifted.push_back(lift_operator(out.operators.back(), out.split));
  }
  return out;
}

}  // namespace noether
