#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "amitsur/rational.hpp"

namespace amitsur {

/// Dense row-major matrix over ℚ.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const { return entries_; }

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> row(std::size_t r) const;
  RationalMatrix transpose() const;

  std::vector<Rational> apply(std::span<const Rational> x) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct LinearSolution {
  bool consistent = false;
  std::vector<Rational> particular;          // one solution (free variables set to 0)
  std::vector<std::vector<Rational>> kernel;  // basis of {x : Mx = 0}
  /// When inconsistent: y with yᵀM = 0 and yᵀb = 1.
  std::vector<Rational> certificate;
};

/// Exact Gauss-Jordan elimination, pivoting on the first nonzero entry.
LinearSolution solve_linear(const RationalMatrix& m, std::span<const Rational> b);

std::size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
/// Throws SingularSystem when m is not invertible.
RationalMatrix inverse(const RationalMatrix& m);
/// Kernel basis of m.
std::vector<std::vector<Rational>> kernel(const RationalMatrix& m);

}  // namespace amitsur
