#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "amitsur/amitsur.hpp"
#include "amitsur/field_units.hpp"
#include "amitsur/integer_matrix.hpp"
#include "amitsur/splitting.hpp"

namespace amitsur {

/// A non-archimedean place of one component of F^{⊗(level+1)}.
struct Place {
  unsigned level = 0;
  std::size_t component = 0;
  Integer p;
  PlaceKind kind = PlaceKind::Rational;

  PrimeIdeal prime() const { return {p, kind}; }
  std::strong_ordering operator<=>(const Place& o) const;
  bool operator==(const Place& o) const = default;
};

class Divisor {
 public:
  explicit Divisor(unsigned level = 0) : level_(level) {}

  unsigned level() const { return level_; }
  const std::map<Place, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer operator[](const Place& q) const;
  /// Adds c·q; throws InvalidInput if q lives at another level.
  void add(const Place& q, const Integer& c);
  /// Rational primes below the support.
  std::vector<Integer> primes() const;

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  Divisor& operator*=(const Integer& c);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(Divisor a, const Integer& c) { return a *= c; }
  bool operator==(const Divisor& o) const = default;

 private:
  unsigned level_;
  std::map<Place, Integer> terms_;
};

/// Throws NonUnit for zero divisors.
Divisor divisor_of(const Splitting& s, const TensorElement& a);
Divisor divisor_of(const TensorElement& a);

Divisor pushforward(const Splitting& s, const ComponentMap& f, const Divisor& d);
/// Σ_i (−1)^i pushforward along ε_i.
Divisor delta_divisor(const Splitting& s, const Divisor& d);
/// E on level 0 with delta_divisor(E) = D. Throws NotInKernel or RamifiedSupport.
Divisor divisor_trivialize(const Splitting& s, const Divisor& d);

/// Primes ramified in some component of F.
std::vector<Integer> ramified_places(const EtaleAlgebraPtr& f);

struct ArithmeticOptions {
  FactorBaseOptions factor_base;
  /// Bound on |disc K| for a quadratic component; none disables the check.
  std::optional<Integer> max_disc = Integer(1'000'000);
};

/// Class group of the quadratic component field of F (trivial when F is split).
ClassGroup class_group(const Splitting& s, const ArithmeticOptions& opts = {});

/// Coordinates are free generators first, then torsion generators of the given orders.
struct FgAbelianGroup {
  std::vector<TensorElement> generators;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_invariants;

  std::size_t size() const { return free_rank + torsion_invariants.size(); }
};

/// Units of F^{⊗(level+1)} whose divisors are supported above S.
class SUnitGroup {
 public:
  SUnitGroup(SplittingPtr s, unsigned level, std::vector<Integer> s_primes,
             std::shared_ptr<const FieldSUnits> field_units = nullptr, const ArithmeticOptions& opts = {});

  const Splitting& splitting() const { return *s_; }
  unsigned level() const { return level_; }
  const std::vector<Integer>& s_primes() const { return s_primes_; }
  const FgAbelianGroup& group() const { return group_; }
  const std::shared_ptr<const FieldSUnits>& field_units() const { return k_units_; }

  /// Throws InvalidInput when the value is not an S-unit.
  std::vector<Integer> dlog(const std::vector<FieldElem>& values) const;
  std::vector<Integer> dlog(const TensorElement& a) const;
  std::vector<FieldElem> evaluate_components(std::span<const Integer> exponents) const;
  TensorElement evaluate(std::span<const Integer> exponents) const;

 private:
  struct Slot {
    std::size_t component;
    std::size_t offset;  // first free coordinate
  };
  SplittingPtr s_;
  unsigned level_;
  std::vector<Integer> s_primes_;
  std::shared_ptr<const FieldSUnits> k_units_;
  std::vector<Slot> slots_;
  FgAbelianGroup group_;
};

SUnitGroup s_unit_group(const EtaleAlgebraPtr& f, unsigned level, std::vector<Integer> s_primes,
                        const ArithmeticOptions& opts = {});

struct FgSolution {
  bool soluble = false;
  std::vector<Integer> preimage;
  /// When insoluble: y and modulus q (0 for exact) with y·hom ≡ 0 but y·target ≢ 0 (mod q),
  /// where hom is extended by the relations of the target group.
  std::vector<Integer> certificate;
  Integer modulus;
};

/// Solves hom(x) = target. Rows of hom are coordinates of h, columns coordinates of g.
/// Throws InconsistentPresentation if hom does not respect the torsion of g.
FgSolution solve_in_fg_abelian(const FgAbelianGroup& g, const FgAbelianGroup& h, const IntegerMatrix& hom,
                               std::span<const Integer> target);

struct Trivialisation {
  TensorElement a;
  std::vector<Integer> s_primes;
};

/// a with Δ(a) = b among the S-units. Throws NotACoboundary when none exists.
Trivialisation trivialize_coboundary(const Cocycle2& b, const ArithmeticOptions& opts = {});

}  // namespace amitsur
