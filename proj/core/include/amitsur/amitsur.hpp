#pragma once

#include <vector>

#include "amitsur/etale.hpp"
#include "amitsur/matrix.hpp"

namespace amitsur {

/// A level-2 unit c with Δ(c) = 1.
class Cocycle2 {
 public:
  /// Checks the level only; use checked() to also verify the unit and cocycle conditions.
  explicit Cocycle2(TensorElement value);
  static Cocycle2 checked(TensorElement value);
  static Cocycle2 trivial(const EtaleAlgebraPtr& f);

  const TensorElement& value() const { return value_; }
  bool is_cocycle() const;

 private:
  TensorElement value_;
};

/// Product in A(F,c): a·a' = Tr_{F⊗3/F⊗2}(ε_2(a)·c·ε_0(a')).
TensorElement amitsur_mul(const TensorElement& a, const TensorElement& b, const Cocycle2& c);

/// The two-sided unit of A(F,c), by solving unit·e = e = e·unit over the monomial basis.
TensorElement amitsur_unit(const Cocycle2& c);

/// A(F,1) → M_d(ℚ), a⊗a' ↦ (x ↦ a·Tr(a'x)), in the basis 1, X, .., X^{d-1}.
RationalMatrix trivial_matrix_iso(const TensorElement& a);

/// m ↦ m·a^{-1}, an isomorphism A(F,c) → A(F,c·Δ(a)).
TensorElement twist_by_cochain(const TensorElement& m, const TensorElement& a);

/// Brauer factor set of a split étale algebra: values c_{i,k,j} at flat index (i·d + k)·d + j.
struct FactorSet {
  std::vector<Rational> roots;
  std::vector<Rational> values;

  std::size_t degree() const { return roots.size(); }
  const Rational& operator()(std::size_t i, std::size_t k, std::size_t j) const {
    const std::size_t d = degree();
    return values[(i * d + k) * d + j];
  }
  /// c_{ikj}·c_{ijl} = c_{ikl}·c_{kjl} for all indices, and no zero values.
  bool is_cocycle() const;
};

/// Evaluations Q̃(r_{i_0}, .., r_{i_n}), laid out like the coefficients of a.
/// Throws InvalidInput unless the roots are distinct roots of P.
std::vector<Rational> psi(const TensorElement& a, const std::vector<Rational>& roots);

FactorSet factor_set_of(const Cocycle2& c, const std::vector<Rational>& roots);

/// Pointwise Brauer differential of a d^{level+1} array: ∏_i (drop index i)^{(-1)^i}.
std::vector<Rational> brauer_differential(const std::vector<Rational>& values, std::size_t d, unsigned level);

/// l''_{ij} = Σ_k l_{ik}·c_{ikj}·l'_{kj}.
RationalMatrix brauer_mul(const RationalMatrix& l, const RationalMatrix& l2, const FactorSet& fs);

struct ReducedFactorSet {
  FactorSet reduced;
  RationalMatrix cochain;  // a with a_ii = c_iii^{-1}, 1 elsewhere
};

/// Normalises c_{iii} = 1 by multiplying with the differential of a diagonal cochain.
ReducedFactorSet reduce_factor_set(const FactorSet& fs);

}  // namespace amitsur
