#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "amitsur/matrix.hpp"
#include "amitsur/polynomial.hpp"
#include "amitsur/rational.hpp"

namespace amitsur {

/// F = ℚ[X]/(P) for monic separable P, with the tables every tensor power needs.
class EtaleAlgebra {
 public:
  /// Throws InvalidInput unless P is monic, separable and nonconstant.
  static std::shared_ptr<const EtaleAlgebra> make(const Polynomial& p);

  const Polynomial& poly() const { return p_; }
  std::size_t degree() const { return d_; }
  const std::vector<PolyFactor>& factors() const { return factors_; }
  /// Tr(X^k) for 0 <= k < 2d-1.
  const std::vector<Rational>& power_traces() const { return traces_; }
  /// Coefficients of X^k mod P for 0 <= k < 2d-1.
  const std::vector<std::vector<Rational>>& reduction() const { return red_; }

 private:
  explicit EtaleAlgebra(const Polynomial& p);
  Polynomial p_;
  std::size_t d_ = 0;
  std::vector<PolyFactor> factors_;
  std::vector<Rational> traces_;
  std::vector<std::vector<Rational>> red_;
};

using EtaleAlgebraPtr = std::shared_ptr<const EtaleAlgebra>;

/// Element of F^{⊗(n+1)} ≅ ℚ[X_0..X_n]/(P(X_0),..,P(X_n)), stored as the reduced lift.
/// Coefficient of X_0^{e_0}..X_n^{e_n} sits at Σ e_k d^{n-k} (X_0 varies slowest).
class TensorElement {
 public:
  TensorElement(EtaleAlgebraPtr f, unsigned level, std::vector<Rational> coeffs);

  static TensorElement zero(EtaleAlgebraPtr f, unsigned level);
  static TensorElement one(EtaleAlgebraPtr f, unsigned level);
  static TensorElement monomial(EtaleAlgebraPtr f, std::span<const unsigned> exponents,
                                const Rational& c = Rational(1));
  /// X_i at the given level.
  static TensorElement variable(EtaleAlgebraPtr f, unsigned level, unsigned i);
  /// Level-0 element q(X_0) mod P.
  static TensorElement from_polynomial(EtaleAlgebraPtr f, const Polynomial& q);

  const EtaleAlgebraPtr& algebra() const { return f_; }
  const EtaleAlgebra& field() const { return *f_; }
  unsigned level() const { return level_; }
  std::size_t degree() const { return f_->degree(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

  std::size_t index(std::span<const unsigned> exponents) const;
  std::vector<unsigned> exponents(std::size_t index) const;

  bool is_zero() const;
  bool is_one() const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Rational& c) { return a *= c; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  bool operator==(const TensorElement& o) const;

 private:
  EtaleAlgebraPtr f_;
  unsigned level_ = 0;
  std::vector<Rational> coeffs_;
};

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);
/// Throws NonUnit (with a nonzero annihilator) when a is a zero divisor.
TensorElement tensor_inv(const TensorElement& a);
TensorElement tensor_pow(const TensorElement& a, long e);
/// Matrix of y ↦ a·y on the monomial basis.
RationalMatrix multiplication_matrix(const TensorElement& a);

/// Inserts a tensor factor 1 at slot i (0 <= i <= level+1).
TensorElement epsilon(unsigned i, const TensorElement& a);
/// ∏ ε_i(a)^{(-1)^i}; a must be a unit.
TensorElement delta(const TensorElement& a);

Rational trace_F(const TensorElement& a);
/// F^{⊗3} → F^{⊗2}, a_0⊗a_1⊗a_2 ↦ Tr(a_1)·a_0⊗a_2.
TensorElement trace_r2_r1(const TensorElement& a);

}  // namespace amitsur
