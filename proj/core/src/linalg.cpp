#include "noether/linalg.hpp"

#include <numeric>

namespace noether {

std::vector<Monomial> d_monomials(std::size_t block_size, unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto layer = monomials_of_degree(block_size, d);
    out.insert(out.end(), layer.rbegin(), layer.rend());
    if (block_size == 0) break;
  }
  return out;
}

std::vector<std::size_t> leading_first(const std::vector<Monomial>& labels) {
  std::vector<std::size_t> idx(labels.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return d_compare(labels[a], labels[b]) > 0; });
  return idx;
}

Eigen::MatrixXcd numeric_kernel(const Eigen::MatrixXcd& m, double tol) {
  const auto cols = m.cols();
  if (cols == 0) return Eigen::MatrixXcd(0, 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < cols; ++j) check_finite(m(i, j), "matrix entry");
  if (m.rows() == 0) return Eigen::MatrixXcd::Identity(cols, cols);

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) fail(ErrorKind::NumericalFailure, "SVD did not converge");
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 && s(0) > 0.0 ? s(0) : 1.0;
  // Singular values beyond min(rows, cols) are implicitly zero.
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * smax) ++rank;
  Eigen::MatrixXcd k = svd.matrixV().rightCols(cols - rank);
  const double norm = s.size() > 0 ? s(0) : 0.0;
  for (Eigen::Index j = 0; j < k.cols(); ++j) {
    const double res = (m * k.col(j)).norm();
    if (res > 10.0 * tol * std::max(norm, 1e-300) && res > 0.0)
      fail(ErrorKind::NumericalFailure, "kernel vector residual exceeds tolerance");
  }
  return k;
}

Eigen::MatrixXcd numeric_column_echelon(const Eigen::MatrixXcd& basis, const std::vector<Monomial>& labels,
                                        double tol, std::vector<std::size_t>* pivots_out) {
  if (static_cast<std::size_t>(basis.rows()) != labels.size())
    fail(ErrorKind::ContextMismatch, "basis rows do not match labels");
  Eigen::MatrixXcd v = basis;
  const Eigen::Index k = v.cols();
  const auto order = leading_first(labels);
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  std::vector<std::size_t> pivot_of(static_cast<std::size_t>(k), labels.size());
  std::size_t found = 0;
  for (std::size_t c : order) {
    const auto row = static_cast<Eigen::Index>(c);
    const double scale = v.cwiseAbs().maxCoeff();
    Eigen::Index p = -1;
    double best = 0.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double a = std::abs(v(row, j));
      if (a > best) { best = a; p = j; }
    }
    if (p < 0 || best <= tol * std::max(scale, 1e-300)) {
      for (Eigen::Index j = 0; j < k; ++j)
        if (!used[static_cast<std::size_t>(j)]) v(row, j) = 0.0;
      continue;
    }
    used[static_cast<std::size_t>(p)] = true;
    pivot_of[static_cast<std::size_t>(p)] = c;
    v.col(p) /= v(row, p);
    v(row, p) = 1.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      if (j == p) continue;
      const ApproxComplex f = v(row, j);
      if (f != ApproxComplex(0.0)) v.col(j) -= f * v.col(p);
      v(row, j) = 0.0;
    }
    ++found;
  }
  if (found != static_cast<std::size_t>(k)) fail(ErrorKind::DegenerateBasis, "kernel basis is numerically rank deficient");

  // Snap tiny entries relative to each column's scale.
  for (Eigen::Index j = 0; j < k; ++j) {
    const double m = v.col(j).cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      ApproxComplex& x = v(i, j);
      if (std::abs(x) <= tol * m) x = 0.0;
      else {
        if (std::abs(x.real()) <= tol * m) x.real(0.0);
        if (std::abs(x.imag()) <= tol * m) x.imag(0.0);
      }
    }
  }

  std::vector<Eigen::Index> cols(static_cast<std::size_t>(k));
  std::iota(cols.begin(), cols.end(), 0);
  std::sort(cols.begin(), cols.end(), [&](Eigen::Index a, Eigen::Index b) {
    return d_compare(labels[pivot_of[static_cast<std::size_t>(a)]], labels[pivot_of[static_cast<std::size_t>(b)]]) < 0;
  });
  Eigen::MatrixXcd out(v.rows(), k);
  if (pivots_out) pivots_out->clear();
  for (Eigen::Index j = 0; j < k; ++j) {
    out.col(j) = v.col(cols[static_cast<std::size_t>(j)]);
    if (pivots_out) pivots_out->push_back(pivot_of[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])]);
  }
  return out;
}

}  // namespace noether
