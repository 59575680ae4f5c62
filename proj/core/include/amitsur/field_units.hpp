#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "amitsur/quadratic_field.hpp"

namespace amitsur {

struct FactorBaseOptions {
  /// Use min(Minkowski, 12·log²|Δ|) as factor-base bound (correct under GRH only).
  bool bach = false;
  /// Cap on sieved candidate elements before giving up with ComputationLimit.
  std::size_t max_candidates = 4'000'000;
};

/// A formal combination of prime ideals of one field.
using IdealCombination = std::vector<std::pair<PrimeIdeal, Integer>>;

struct ClassGroup {
  Integer order;
  /// Nontrivial invariant factors, each dividing the next.
  std::vector<Integer> invariants;
  /// One representative per invariant factor.
  std::vector<IdealCombination> generators;
  /// A small set of prime ideals whose classes generate the group.
  std::vector<PrimeIdeal> generating_places;

  std::vector<Integer> generating_primes() const;
};

ClassGroup class_group(const QuadraticFieldPtr& k, const FactorBaseOptions& opts = {});

/// A generator of the integral ideal ∏ q^e, or nothing when the ideal is not principal.
std::optional<FieldElem> principal_generator(const QuadraticField& k, const IdealCombination& ideal);

/// O_{K,S}^× = ⟨ζ⟩ × ⟨ε⟩ × ⟨γ_1, .., γ_s⟩ for the places above a set S of rational primes.
class FieldSUnits {
 public:
  FieldSUnits(QuadraticFieldPtr k, std::vector<Integer> s_primes, const FactorBaseOptions& opts = {});

  const QuadraticField& field() const { return *k_; }
  const QuadraticFieldPtr& field_ptr() const { return k_; }
  const std::vector<Integer>& s_primes() const { return s_primes_; }
  /// Places above S, in column order of the valuation basis.
  const std::vector<PrimeIdeal>& places() const { return places_; }
  /// ε first for real fields, then one γ per place.
  const std::vector<FieldElem>& free_generators() const { return free_; }
  std::size_t free_rank() const { return free_.size(); }
  unsigned torsion_order() const { return k_->torsion_order(); }
  FieldElem torsion_generator() const { return k_->torsion_generator(); }
  /// Row i: valuations of γ_i at places(); upper triangular.
  const std::vector<std::vector<Integer>>& valuation_basis() const { return basis_; }

  /// Exponents (free..., torsion) with x = ζ^t·∏ g_i^{e_i}. Throws InvalidInput if x is not an S-unit.
  std::vector<Integer> dlog(const FieldElem& x) const;
  FieldElem evaluate(std::span<const Integer> exponents) const;

 private:
  QuadraticFieldPtr k_;
  std::vector<Integer> s_primes_;
  std::vector<PrimeIdeal> places_;
  std::vector<FieldElem> free_;
  std::vector<std::vector<Integer>> basis_;
};

}  // namespace amitsur
