#pragma once

#include <Eigen/Dense>

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "noether/approx.hpp"
#include "noether/monomial.hpp"

namespace noether {

// Order on d-monomials. The leading term of an operator is the largest
// d-monomial: higher total degree first, then the lexicographically larger
// exponent vector (the d of the lowest-index variable ranks highest).
inline int d_compare(const Monomial& a, const Monomial& b) noexcept { return grlex_compare(a, b); }

// Column labels for d-monomials of degree <= d over `block_size` variables,
// listed degree by degree and, inside a degree, leading term first:
// 1, d1, d2, d1^2, d1 d2, d2^2, ...
std::vector<Monomial> d_monomials(std::size_t block_size, unsigned max_degree);

template <class F>
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<F> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, const F& fill) : rows(r), cols(c), data(r * c, fill) {}

  F& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Matrix whose columns carry d-monomial labels and whose rows carry the
// polynomial x^a * f_i that produced them.
template <class F>
struct LabeledMatrix {
  struct RowLabel {
    Monomial multiplier;  // over the full ring
    std::size_t generator = 0;
  };
  DenseMatrix<F> entries;
  std::vector<RowLabel> row_labels;
  std::vector<Monomial> col_labels;
  std::vector<std::size_t> block;  // variables the column labels differentiate
};

namespace detail {
template <class F>
bool field_zero(const F& x) {
  using noether::is_zero;
  return is_zero(x);
}
}  // namespace detail

// Right null space by Gauss-Jordan elimination with exact arithmetic. The
// pivot of each column is the first nonzero entry at or below the current
// row. Returns one vector per free column.
template <class F>
std::vector<std::vector<F>> exact_kernel(DenseMatrix<F> m, const F& zero, const F& one,
                                         std::size_t* rank_out = nullptr) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && detail::field_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m(p, k), m(r, k));
    const F inv = one / m(r, c);
    for (std::size_t k = c; k < m.cols; ++k)
      if (!detail::field_zero(m(r, k))) m(r, k) = m(r, k) * inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || detail::field_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t k = c; k < m.cols; ++k)
        if (!detail::field_zero(m(r, k))) m(i, k) = m(i, k) - f * m(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (rank_out) *rank_out = pivot_cols.size();
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols, zero);
    v[f] = one;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      if (!detail::field_zero(m(i, f))) v[pivot_cols[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Label positions sorted so the leading label comes first.
std::vector<std::size_t> leading_first(const std::vector<Monomial>& labels);

// Canonical basis of the span of `vectors` (each indexed like `labels`):
// every vector has entry 1 at its leading label, every other vector is zero
// there, and the result is sorted by pivot label ascending (1 first).
template <class F>
std::vector<std::vector<F>> reduced_column_echelon(std::vector<std::vector<F>> vectors,
                                                   const std::vector<Monomial>& labels, const F& one,
                                                   std::vector<std::size_t>* pivots_out = nullptr) {
  const auto order = leading_first(labels);
  std::vector<std::size_t> pivot_of(vectors.size(), labels.size());
  std::vector<bool> used(vectors.size(), false);
  for (std::size_t c : order) {
    std::size_t p = vectors.size();
    for (std::size_t k = 0; k < vectors.size(); ++k)
      if (!used[k] && !detail::field_zero(vectors[k][c])) { p = k; break; }
    if (p == vectors.size()) continue;
    used[p] = true;
    pivot_of[p] = c;
    const F inv = one / vectors[p][c];
    for (auto& x : vectors[p])
      if (!detail::field_zero(x)) x = x * inv;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      if (k == p || detail::field_zero(vectors[k][c])) continue;
      const F f = vectors[k][c];
      for (std::size_t j = 0; j < labels.size(); ++j)
        if (!detail::field_zero(vectors[p][j])) vectors[k][j] = vectors[k][j] - f * vectors[p][j];
    }
  }
  std::vector<std::pair<std::size_t, std::vector<F>>> kept;
  for (std::size_t k = 0; k < vectors.size(); ++k)
    if (used[k]) kept.emplace_back(pivot_of[k], std::move(vectors[k]));
  std::sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
    return d_compare(labels[a.first], labels[b.first]) < 0;
  });
  std::vector<std::vector<F>> out;
  if (pivots_out) pivots_out->clear();
  for (auto& [p, v] : kept) {
    out.push_back(std::move(v));
    if (pivots_out) pivots_out->push_back(p);
  }
  return out;
}

// Right singular vectors with singular value <= tol * sigma_max (sigma_max
// taken as 1 for the zero matrix), as the columns of the result. Each vector
// is checked against ||M v|| <= 10 tol ||M||; a violation raises
// NumericalFailure.
Eigen::MatrixXcd numeric_kernel(const Eigen::MatrixXcd& m, double tol = kDefaultTolerance);

// Numeric counterpart of reduced_column_echelon: the columns of `basis` are
// rewritten with unit pivots at their leading labels. Entries below
// tol * max|entry| are snapped to zero. A basis that loses rank raises
// DegenerateBasis. Columns are returned sorted by pivot ascending.
Eigen::MatrixXcd numeric_column_echelon(const Eigen::MatrixXcd& basis, const std::vector<Monomial>& labels,
                                        double tol = kDefaultTolerance,
                                        std::vector<std::size_t>* pivots_out = nullptr);

// Writes a labeled matrix as CSV: a header row of column labels, then one row
// per matrix row with its label first.
template <class F>
void write_csv(std::ostream& os, const LabeledMatrix<F>& m, const std::function<std::string(const F&)>& cell,
               const std::function<std::string(const Monomial&)>& col_name,
               const std::function<std::string(std::size_t)>& row_name) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  os << "\"row\"";
  for (const auto& c : m.col_labels) os << ',' << quote(col_name(c));
  os << '\n';
  for (std::size_t i = 0; i < m.entries.rows; ++i) {
    os << quote(row_name(i));
    for (std::size_t j = 0; j < m.entries.cols; ++j) os << ',' << quote(cell(m.entries(i, j)));
    os << '\n';
  }
}

}  // namespace noether
