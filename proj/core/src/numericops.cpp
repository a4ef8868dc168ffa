#include "noether/numericops.hpp"

#include <numeric>

namespace noether {
namespace {

ApproxComplex monomial_value(const Monomial& m, std::span<const ApproxComplex> p) {
  ApproxComplex v = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (unsigned e = 0; e < m[i]; ++e) v *= p[i];
  return v;
}

void check_point(std::span<const ApproxComplex> point, std::size_t n) {
  if (point.size() != n) fail(ErrorKind::ContextMismatch, "point has wrong dimension");
  for (const auto& c : point) check_finite(c, "point coordinate");
}

bool fits(const InterpolatedCoefficient& c, const std::vector<std::vector<ApproxComplex>>& points,
          const std::vector<ApproxComplex>& values, double* worst) {
  double w = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ApproxComplex g = evaluate(c.denominator, points[i]);
    if (std::abs(g) == 0.0) return false;
    const double err = std::abs(evaluate(c.numerator, points[i]) / g - values[i]) / (1.0 + std::abs(values[i]));
    w = std::max(w, err);
  }
  *worst = w;
  return w <= 1e-6;
}

// Builds num/den polynomials from an unknown vector; exact when every entry
// rationalizes within 1e-6 with denominator <= 1e6.
InterpolatedCoefficient assemble(const Eigen::VectorXcd& x, const std::vector<Monomial>& num,
                                 const std::vector<Monomial>& den, std::size_t nvars, bool rationalize) {
  std::vector<QPoly::Term> nt, dt;
  bool exact = true;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double re = x(j).real();
    if (std::abs(x(j)) <= 1e-12) continue;
    Rational q = Rational::from_double(re);
    if (rationalize) {
      const Rational r = Rational::approximate(re, 1000000);
      if (std::abs(r.to_double() - re) <= 1e-6 && std::abs(x(j).imag()) <= 1e-6) q = r;
      else exact = false;
    } else {
      exact = false;
    }
    if (q.is_zero()) continue;
    const auto k = static_cast<std::size_t>(j);
    if (k < num.size()) nt.push_back({num[k], q});
    else dt.push_back({den[k - num.size()], q});
  }
  InterpolatedCoefficient c;
  c.numerator = QPoly::from_terms(nvars, std::move(nt));
  c.denominator = QPoly::from_terms(nvars, std::move(dt));
  c.exact = exact;
  return c;
}

}  // namespace

double point_residual(const std::vector<QPoly>& generators, std::span<const ApproxComplex> point) {
  double worst = 0.0;
  for (const auto& f : generators) {
    ApproxComplex sum = 0.0;
    double scale = 1.0;
    for (const auto& t : f.terms()) {
      const ApproxComplex v = to_complex(t.coeff) * monomial_value(t.mono, point);
      sum += v;
      scale += std::abs(v);
    }
    worst = std::max(worst, std::abs(sum) / scale);
  }
  return worst;
}

std::vector<SpecializedOperator> PointOperators::operators() const {
  std::vector<SpecializedOperator> out;
  for (Eigen::Index k = 0; k < echelon.cols(); ++k) {
    SpecializedOperator op{block, {}};
    for (std::size_t j : leading_first(labels)) {
      const ApproxComplex c = echelon(static_cast<Eigen::Index>(j), k);
      if (c != ApproxComplex(0.0)) op.terms.push_back({labels[j], c});
    }
    out.push_back(std::move(op));
  }
  return out;
}

LabeledMatrix<ApproxComplex> numeric_macaulay_matrix(const std::vector<QPoly>& generators, unsigned d,
                                                     std::span<const ApproxComplex> point, const Split& split) {
  const std::size_t n = split.nvars();
  check_point(point, n);
  LabeledMatrix<ApproxComplex> m;
  m.block = split.dependent();
  m.col_labels = d_monomials(m.block.size(), d);
  const auto mults = d >= 1 ? d_monomials(n, d - 1) : std::vector<Monomial>{};
  m.entries = DenseMatrix<ApproxComplex>(mults.size() * generators.size(), m.col_labels.size(), 0.0);
  std::size_t r = 0;
  for (const auto& a : mults) {
    for (std::size_t i = 0; i < generators.size(); ++i, ++r) {
      const QPoly g = generators[i].mul_monomial(a);
      m.row_labels.push_back({a, i});
      for (std::size_t c = 0; c < m.col_labels.size(); ++c) {
        if (m.col_labels[c].degree() > g.total_degree()) continue;
        m.entries(r, c) = evaluate(g.derivative(m.col_labels[c], m.block), point);
      }
    }
  }
  return m;
}

PointOperators noetherian_operators_at_point(const std::vector<QPoly>& generators,
                                             std::span<const ApproxComplex> point, const Split& split,
                                             const NumericOptions& options) {
  check_point(point, split.nvars());
  if (point_residual(generators, point) > options.point_tol)
    fail(ErrorKind::NotOnVariety, "point does not satisfy the generators within tolerance");

  PointOperators out;
  out.block = split.dependent();
  out.kernel_dimensions.push_back(1);
  for (unsigned d = 1; d <= options.dmax; ++d) {
    const auto m = numeric_macaulay_matrix(generators, d, point, split);
    Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.entries.rows), static_cast<Eigen::Index>(m.entries.cols));
    for (std::size_t i = 0; i < m.entries.rows; ++i)
      for (std::size_t j = 0; j < m.entries.cols; ++j)
        e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m.entries(i, j);
    const Eigen::MatrixXcd k = numeric_kernel(e, options.tol);
    const auto dim = static_cast<std::size_t>(k.cols());
    out.kernel_dimensions.push_back(dim);
    if (dim == out.kernel_dimensions[d - 1]) {
      out.degree = d;
      out.labels = m.col_labels;
      out.echelon = numeric_column_echelon(k, m.col_labels, options.tol, &out.pivots);
      return out;
    }
  }
  fail(ErrorKind::NoStabilization, "numeric kernel dimension still growing at degree " + std::to_string(options.dmax));
}

ApproxComplex InterpolatedCoefficient::evaluate(std::span<const ApproxComplex> point) const {
  const ApproxComplex g = noether::evaluate(denominator, point);
  if (std::abs(g) == 0.0) fail(ErrorKind::DenominatorVanishes, "interpolated denominator vanishes");
  return noether::evaluate(numerator, point) / g;
}

InterpolatedCoefficient rational_interpolation(const std::vector<std::vector<ApproxComplex>>& points,
                                               const std::vector<ApproxComplex>& values,
                                               const std::vector<Monomial>& numerator_support,
                                               const std::vector<Monomial>& denominator_support, double tol) {
  if (points.size() != values.size()) fail(ErrorKind::InvalidInput, "point and value counts differ");
  if (numerator_support.empty() || denominator_support.empty())
    fail(ErrorKind::InvalidInput, "empty interpolation ansatz");
  const std::size_t nn = numerator_support.size(), nd = denominator_support.size();
  if (points.size() < nn + nd + 2)
    fail(ErrorKind::NeedMorePoints, "interpolation needs at least " + std::to_string(nn + nd + 2) + " points, got " +
                                        std::to_string(points.size()));
  const std::size_t nvars = numerator_support.front().size();
  for (const auto& p : points) check_point(p, nvars);
  for (const auto& v : values) check_finite(v, "value");

  const std::size_t fit = points.size() - 2;
  const auto& p0 = points[fit];
  const auto& p1 = points[fit + 1];

  // Columns: numerator unknowns then denominator unknowns.
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(fit), static_cast<Eigen::Index>(nn + nd));
  for (std::size_t i = 0; i < fit; ++i) {
    for (std::size_t j = 0; j < nn; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = monomial_value(numerator_support[j], points[i]);
    for (std::size_t j = 0; j < nd; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(nn + j)) =
          -values[i] * monomial_value(denominator_support[j], points[i]);
  }

  // Drop columns that vanish at every fit point (their unknowns are
  // unconstrained) and scale the rest to unit norm.
  std::vector<Eigen::Index> live;
  std::vector<double> scale;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double norm = m.col(j).norm();
    if (norm > 1e-300 && norm > 1e-14 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
      live.push_back(j);
      scale.push_back(norm);
    }
  }
  if (live.empty()) fail(ErrorKind::InterpolationFailed, "interpolation matrix is zero");
  Eigen::MatrixXcd reduced(m.rows(), static_cast<Eigen::Index>(live.size()));
  for (std::size_t k = 0; k < live.size(); ++k) reduced.col(static_cast<Eigen::Index>(k)) = m.col(live[k]) / scale[k];

  Eigen::MatrixXcd kernel = numeric_kernel(reduced, tol);
  if (kernel.cols() == 0) fail(ErrorKind::InterpolationFailed, "no rational function fits the data");

  // Reduced echelon form, eliminating the last unknowns first so survivors
  // are sparse in the high-degree monomials.
  const Eigen::Index kc = kernel.cols(), kr = kernel.rows();
  std::vector<bool> used(static_cast<std::size_t>(kc), false);
  for (Eigen::Index row = kr - 1; row >= 0; --row) {
    Eigen::Index p = -1;
    double best = tol;
    for (Eigen::Index j = 0; j < kc; ++j)
      if (!used[static_cast<std::size_t>(j)] && std::abs(kernel(row, j)) > best) { best = std::abs(kernel(row, j)); p = j; }
    if (p < 0) continue;
    used[static_cast<std::size_t>(p)] = true;
    kernel.col(p) /= kernel(row, p);
    for (Eigen::Index j = 0; j < kc; ++j)
      if (j != p) kernel.col(j) -= kernel(row, j) * kernel.col(p);
  }

  struct Candidate {
    Eigen::VectorXcd x;
    std::size_t nonzeros;
  };
  std::vector<Candidate> survivors;
  for (Eigen::Index j = 0; j < kc; ++j) {
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(nn + nd));
    for (std::size_t k = 0; k < live.size(); ++k)
      x(live[k]) = kernel(static_cast<Eigen::Index>(k), j) / scale[k];
    const double mag = x.cwiseAbs().maxCoeff();
    std::size_t nz = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (std::abs(x(i)) <= tol * mag) x(i) = 0.0;
      else ++nz;
    }
    auto value_at = [&](const std::vector<ApproxComplex>& p, std::size_t from, std::size_t count,
                        const std::vector<Monomial>& support) {
      ApproxComplex s = 0.0;
      double size = 0.0;
      for (std::size_t i = 0; i < count; ++i) {
        const ApproxComplex term = x(static_cast<Eigen::Index>(from + i)) * monomial_value(support[i], p);
        s += term;
        size += std::abs(term);
      }
      return std::abs(s) > tol * std::max(size, 1e-300);
    };
    if (!value_at(p0, 0, nn, numerator_support) || !value_at(p0, nn, nd, denominator_support)) continue;
    if (!value_at(p1, nn, nd, denominator_support)) continue;
    // Normalize by the largest denominator coefficient.
    Eigen::Index big = static_cast<Eigen::Index>(nn);
    for (Eigen::Index i = static_cast<Eigen::Index>(nn); i < x.size(); ++i)
      if (std::abs(x(i)) > std::abs(x(big))) big = i;
    x /= x(big);
    survivors.push_back({x, nz});
  }
  if (survivors.empty()) fail(ErrorKind::InterpolationFailed, "every kernel vector vanishes at the check point");
  std::stable_sort(survivors.begin(), survivors.end(),
                   [](const Candidate& a, const Candidate& b) { return a.nonzeros < b.nonzeros; });

  for (const auto& s : survivors) {
    for (bool rationalize : {true, false}) {
      InterpolatedCoefficient c = assemble(s.x, numerator_support, denominator_support, nvars, rationalize);
      if (c.denominator.is_zero()) continue;
      double worst = 0.0;
      if (fits(c, points, values, &worst)) {
        c.residual = worst;
        if (c.exact) {
          // Present the exact quotient in lowest terms.
          const RationalFunction r(c.numerator, c.denominator);
          c.numerator = r.numerator();
          c.denominator = r.denominator();
        }
        return c;
      }
    }
  }
  fail(ErrorKind::InterpolationFailed, "interpolant does not reproduce the held-out values");
}

std::vector<Monomial> numerator_ansatz(std::size_t nvars, unsigned d) { return monomials_up_to(nvars, d); }

std::vector<Monomial> denominator_ansatz(const Split& split, unsigned d) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_up_to(split.independent().size(), d)) {
    Monomial full(split.nvars());
    for (std::size_t j = 0; j < split.independent().size(); ++j) full.set(split.independent()[j], m[j]);
    out.push_back(full);
  }
  return out;
}

WeylOperator<RationalFunction> NumericOperator::to_weyl() const {
  WeylOperator<RationalFunction> op(nvars, block);
  for (const auto& t : terms) op.add_term(t.d, t.coeff.as_rational_function());
  return op;
}

SpecializedOperator NumericOperator::specialize(std::span<const ApproxComplex> point) const {
  SpecializedOperator s{block, {}};
  for (const auto& t : terms) s.terms.push_back({t.d, t.coeff.evaluate(point)});
  return s;
}

InterpolatedCoefficient interpolate_values(const std::vector<std::vector<ApproxComplex>>& coords,
                                           const std::vector<ApproxComplex>& values, const Split& split,
                                           const NumericOptions& options, unsigned* degree_out) {
  std::string last_error = "no ansatz degree tried";
  for (unsigned deg = 0; deg <= options.interpolation_dmax; ++deg) {
    const auto num = numerator_ansatz(split.nvars(), deg);
    const auto den = denominator_ansatz(split, deg);
    if (coords.size() < num.size() + den.size() + 2) {
      fail(ErrorKind::NeedMorePoints, "interpolation at ansatz degree " + std::to_string(deg) + " needs " +
                                          std::to_string(num.size() + den.size() + 2) + " points, got " +
                                          std::to_string(coords.size()) + " (" + last_error + ")");
    }
    try {
      auto c = rational_interpolation(coords, values, num, den, options.tol);
      if (degree_out) *degree_out = deg;
      return c;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InterpolationFailed) throw;
      last_error = e.what();
    }
  }
  fail(ErrorKind::InterpolationFailed, "coefficient interpolation failed: " + last_error);
}

NumericOperatorSet numerical_noetherian_operators(const std::vector<QPoly>& generators,
                                                  const std::vector<WitnessPoint>& points, const Split& split,
                                                  const NumericOptions& options) {
  if (points.empty()) fail(ErrorKind::NeedMorePoints, "no witness points given");
  NumericOperatorSet out;
  out.nvars = split.nvars();
  out.split = split;
  out.ideal = generators;

  std::vector<PointOperators> at;
  std::vector<std::vector<ApproxComplex>> coords;
  for (const auto& p : points) {
    at.push_back(noetherian_operators_at_point(generators, p.coords, split, options));
    out.multiplicities.push_back(at.back().multiplicity());
    coords.push_back(p.coords);
  }
  const auto& first = at.front();
  for (const auto& a : at) {
    if (a.multiplicity() != first.multiplicity())
      fail(ErrorKind::InconsistentSpecializations, "operator counts differ between points");
    if (a.labels.size() < first.labels.size() && a.degree != first.degree)
      fail(ErrorKind::InconsistentSpecializations, "points stabilized at different degrees");
    for (std::size_t k = 0; k < a.multiplicity(); ++k)
      if (a.labels[a.pivots[k]] != first.labels[first.pivots[k]])
        fail(ErrorKind::InconsistentSpecializations, "pivot terms differ between points");
  }

  for (std::size_t k = 0; k < first.multiplicity(); ++k) {
    // Union of supports, leading term first.
    std::vector<Monomial> support;
    for (const auto& a : at)
      for (std::size_t j = 0; j < a.labels.size(); ++j)
        if (a.echelon(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) != ApproxComplex(0.0) &&
            std::find(support.begin(), support.end(), a.labels[j]) == support.end())
          support.push_back(a.labels[j]);
    std::sort(support.begin(), support.end(), [](const Monomial& x, const Monomial& y) { return d_compare(x, y) > 0; });

    NumericOperator op{split.dependent(), {}, split.nvars()};
    for (const auto& d : support) {
      std::vector<ApproxComplex> values;
      bool flagged = false;
      for (const auto& a : at) {
        auto it = std::find(a.labels.begin(), a.labels.end(), d);
        ApproxComplex v = 0.0;
        if (it != a.labels.end()) v = a.echelon(it - a.labels.begin(), static_cast<Eigen::Index>(k));
        if (v == ApproxComplex(0.0)) flagged = true;
        values.push_back(v);
      }
      unsigned deg = 0;
      auto found = interpolate_values(coords, values, split, options, &deg);
      out.ansatz_degree = std::max(out.ansatz_degree, deg);
      found.flagged = flagged;
      op.terms.push_back({d, std::move(found)});
    }
    out.operators.push_back(std::move(op));
  }
  return out;
}

}  // namespace noether
