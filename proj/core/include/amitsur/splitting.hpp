#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "amitsur/etale.hpp"
#include "amitsur/quadratic_field.hpp"

namespace amitsur {

/// A field component of F^{⊗(n+1)}: the image of X_k ↦ ρ_{roots[k]}.
/// It is ℚ when every root is rational and K otherwise; the first irrational root is always a "+" root.
struct Component {
  std::vector<std::size_t> roots;
  bool quadratic = false;
  std::size_t dimension() const { return quadratic ? 2 : 1; }
};

/// Where a target component gets its values under an algebra map: σ^conj of the source value.
struct ComponentLink {
  std::size_t source = 0;
  bool conj = false;
};

/// Algebra map between split tensor powers, recorded per target component.
struct ComponentMap {
  unsigned source_level = 0;
  unsigned target_level = 0;
  std::vector<ComponentLink> links;
};

/// Splitting of F and its tensor powers for P whose irreducible factors have degree ≤ 2
/// and whose quadratic factors all define the same field K.
class Splitting {
 public:
  static constexpr unsigned max_level = 3;

  /// Throws UnsupportedDegree outside that scope.
  static std::shared_ptr<const Splitting> make(EtaleAlgebraPtr f);

  const EtaleAlgebraPtr& algebra() const { return f_; }
  std::size_t degree() const { return f_->degree(); }
  /// Null when P splits over ℚ.
  const QuadraticFieldPtr& field() const { return k_; }
  /// The roots of P, grouped by factor, "+" root first.
  const std::vector<FieldElem>& roots() const { return roots_; }
  /// Index of σ(ρ_i).
  std::size_t conjugate_root(std::size_t i) const { return sigma_[i]; }

  const std::vector<Component>& components(unsigned level) const;
  std::vector<FieldElem> project(const TensorElement& a) const;
  /// Inverse of project. Throws DimensionMismatch on a wrong number of values.
  TensorElement lift(unsigned level, const std::vector<FieldElem>& values) const;
  /// Stacked projection as a square ℚ-matrix, two rows (a, b) for each value a + b√D.
  const RationalMatrix& projection_matrix(unsigned level) const;

  /// ε_i from level n to level n+1.
  ComponentMap face(unsigned n, unsigned i) const;
  ComponentMap identity(unsigned level) const;

  FieldElem apply(const ComponentLink& link, const std::vector<FieldElem>& source) const;

 private:
  explicit Splitting(EtaleAlgebraPtr f);
  struct Level {
    std::vector<Component> components;
    RationalMatrix projection, lift;
  };
  const Level& level(unsigned n) const;
  std::size_t find(unsigned level, const std::vector<std::size_t>& roots) const;

  EtaleAlgebraPtr f_;
  QuadraticFieldPtr k_;
  std::vector<FieldElem> roots_;
  std::vector<bool> rational_;
  std::vector<std::size_t> sigma_;
  mutable std::array<std::once_flag, max_level + 1> once_;
  mutable std::array<Level, max_level + 1> levels_;
};

using SplittingPtr = std::shared_ptr<const Splitting>;

/// A component of F^{⊗(n+1)} together with its projection as ℚ-linear rows.
struct SplitComponent {
  Component component;
  QuadraticFieldPtr field;  // null for ℚ
  RationalMatrix projection;
};

std::vector<SplitComponent> split_components(const EtaleAlgebraPtr& f, unsigned level);

}  // namespace amitsur
