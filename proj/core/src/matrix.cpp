#include "amitsur/matrix.hpp"

#include <utility>

#include "amitsur/errors.hpp"

namespace amitsur {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<std::vector<Rational>>& columns) {
  if (columns.empty()) return {};
  RationalMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows()) throw DimensionMismatch("columns of unequal length");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<long>(r * cols_), entries_.begin() + static_cast<long>((r + 1) * cols_)};
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  std::vector<Rational> y(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (x[c] != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product size mismatch");
  RationalMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

namespace {

// In-place reduced row echelon form restricted to the first `ncols` columns.
// Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(row, j) != 0) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> kernel_from_rref(const RationalMatrix& r, const std::vector<std::size_t>& pivots,
                                                    std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

LinearSolution solve_linear(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = rref(aug, m.cols());

  LinearSolution out;
  out.consistent = true;
  for (std::size_t r = pivots.size(); r < m.rows(); ++r)
    if (aug(r, m.cols()) != 0) out.consistent = false;

  if (!out.consistent) {
    // y with Mᵀy = 0, bᵀy = 1.
    RationalMatrix t(m.cols() + 1, m.rows() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
      t(m.cols(), r) = b[r];
    }
    t(m.cols(), m.rows()) = 1;
    const auto tp = rref(t, m.rows());
    out.certificate.assign(m.rows(), Rational(0));
    for (std::size_t i = 0; i < tp.size(); ++i) out.certificate[tp[i]] = t(i, m.rows());
    return out;
  }

  out.particular.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = aug(i, m.cols());
  out.kernel = kernel_from_rref(aug, pivots, m.cols());
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix w = m;
  return rref(w, w.cols()).size();
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  RationalMatrix w = m;
  const std::size_t n = w.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(c, j));
      det = -det;
    }
    det *= w(c, c);
    const Rational inv = 1 / w(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (w(r, c) == 0) continue;
      const Rational f = w(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) w(r, j) -= f * w(c, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  if (rref(aug, n).size() != n) throw SingularSystem("matrix is not invertible");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<std::vector<Rational>> kernel(const RationalMatrix& m) {
  RationalMatrix w = m;
  const auto pivots = rref(w, w.cols());
  return kernel_from_rref(w, pivots, w.cols());
}

}  // namespace amitsur
