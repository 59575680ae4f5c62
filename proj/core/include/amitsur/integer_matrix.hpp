#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "amitsur/rational.hpp"

namespace amitsur {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Integer>& entries() const { return entries_; }

  std::vector<Integer> apply(std::span<const Integer> x) const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// D = U·M·V with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntegerMatrix u, d, v;
  std::vector<Integer> invariants() const;  // the min(rows, cols) diagonal entries
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Bareiss fraction-free determinant.
Integer determinant(const IntegerMatrix& m);

/// Integer solutions of M·x = b.
struct IntegerSolution {
  bool soluble = false;
  std::vector<Integer> particular;
  std::vector<std::vector<Integer>> kernel;  // ℤ-basis of {x : Mx = 0}
  /// When insoluble: a row y and modulus q (0 means exact) with yᵀM ≡ 0 and yᵀb ≢ 0 (mod q).
  std::vector<Integer> certificate;
  Integer modulus;
};

IntegerSolution solve_integer(const IntegerMatrix& m, std::span<const Integer> b);

}  // namespace amitsur
