#include "amitsur/integer_matrix.hpp"

#include <utility>

#include "amitsur/errors.hpp"
#include "amitsur/number_theory.hpp"

namespace amitsur {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntegerMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  std::vector<Integer> y(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (x[c] != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product size mismatch");
  IntegerMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

struct Reducer {
  IntegerMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // rows (i, j) <- [[s, t], [x, y]] · rows (i, j)
  static void combine_rows(IntegerMatrix& m, std::size_t i, std::size_t j, const Integer& s, const Integer& t,
                           const Integer& x, const Integer& y) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer ri = s * m(i, c) + t * m(j, c);
      Integer rj = x * m(i, c) + y * m(j, c);
      m(i, c) = std::move(ri);
      m(j, c) = std::move(rj);
    }
  }
  static void combine_cols(IntegerMatrix& m, std::size_t i, std::size_t j, const Integer& s, const Integer& t,
                           const Integer& x, const Integer& y) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Integer ci = s * m(r, i) + t * m(r, j);
      Integer cj = x * m(r, i) + y * m(r, j);
      m(r, i) = std::move(ci);
      m(r, j) = std::move(cj);
    }
  }

  // Zeroes a(r, k) using pivot a(k, k) by a unimodular row operation.
  void eliminate_row(std::size_t k, std::size_t r) {
    const Integer p = a(k, k), q = a(r, k);
    if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
      const Integer f = q / p;
      combine_rows(a, k, r, 1, 0, -f, 1);
      combine_rows(u, k, r, 1, 0, -f, 1);
      return;
    }
    const auto e = extended_gcd(p, q);
    const Integer x = -q / e.gcd, y = p / e.gcd;
    combine_rows(a, k, r, e.s, e.t, x, y);
    combine_rows(u, k, r, e.s, e.t, x, y);
  }
  void eliminate_col(std::size_t k, std::size_t c) {
    const Integer p = a(k, k), q = a(k, c);
    if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
      const Integer f = q / p;
      combine_cols(a, k, c, 1, 0, -f, 1);
      combine_cols(v, k, c, 1, 0, -f, 1);
      return;
    }
    const auto e = extended_gcd(p, q);
    const Integer x = -q / e.gcd, y = p / e.gcd;
    combine_cols(a, k, c, e.s, e.t, x, y);
    combine_cols(v, k, c, e.s, e.t, x, y);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  Reducer r{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    // Smallest nonzero entry of the trailing block goes to the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (r.a(i, j) != 0 && (pr == rows || abs(r.a(i, j)) < abs(r.a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    if (pr != k) r.swap_rows(pr, k);
    if (pc != k) r.swap_cols(pc, k);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i)
        if (r.a(i, k) != 0) r.eliminate_row(k, i);
      for (std::size_t j = k + 1; j < cols; ++j)
        if (r.a(k, j) != 0) r.eliminate_col(k, j);
      for (std::size_t i = k + 1; i < rows && !dirty; ++i)
        if (r.a(i, k) != 0) dirty = true;
      if (dirty) continue;
      // Divisibility: fold an offending row into the pivot row and repeat.
      for (std::size_t i = k + 1; i < rows && !dirty; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (!mpz_divisible_p(r.a(i, j).get_mpz_t(), r.a(k, k).get_mpz_t())) {
            Reducer::combine_rows(r.a, k, i, 1, 1, 0, 1);
            Reducer::combine_rows(r.u, k, i, 1, 1, 0, 1);
            dirty = true;
            break;
          }
      if (!dirty) break;
    }
    if (r.a(k, k) < 0) {
      for (std::size_t c = 0; c < cols; ++c) r.a(k, c) = -r.a(k, c);
      for (std::size_t c = 0; c < rows; ++c) r.u(k, c) = -r.u(k, c);
    }
  }
  return {std::move(r.u), std::move(r.a), std::move(r.v)};
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix w = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

IntegerSolution solve_integer(const IntegerMatrix& m, std::span<const Integer> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  const SmithForm snf = smith_normal_form(m);
  const std::vector<Integer> ub = snf.u.apply(b);
  const std::size_t n = m.cols();
  std::size_t r = 0;
  while (r < m.rows() && r < n && snf.d(r, r) != 0) ++r;

  IntegerSolution out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const bool bad = i < r ? !mpz_divisible_p(ub[i].get_mpz_t(), snf.d(i, i).get_mpz_t()) : ub[i] != 0;
    if (bad) {
      out.certificate = std::vector<Integer>(snf.u.entries().begin() + static_cast<long>(i * m.rows()),
                                             snf.u.entries().begin() + static_cast<long>((i + 1) * m.rows()));
      out.modulus = i < r ? snf.d(i, i) : Integer(0);
      return out;
    }
  }
  out.soluble = true;
  std::vector<Integer> y(n, Integer(0));
  for (std::size_t i = 0; i < r; ++i) y[i] = ub[i] / snf.d(i, i);
  out.particular = snf.v.apply(y);
  for (std::size_t j = r; j < n; ++j) {
    std::vector<Integer> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = snf.v(i, j);
    out.kernel.push_back(std::move(col));
  }
  return out;
}

}  // namespace amitsur
