#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amitsur/amitsur.hpp"
#include "amitsur/etale.hpp"
#include "amitsur/matrix.hpp"
#include "amitsur/polynomial.hpp"
#include "amitsur/random.hpp"

namespace amitsur {

/// Finite-dimensional associative unital ℚ-algebra, b_i·b_j = Σ_k λ_{ijk} b_k.
/// Construction verifies associativity on every basis triple and finds the unit.
class StructureConstantAlgebra {
 public:
  StructureConstantAlgebra(std::size_t dim, std::vector<Rational> table, std::vector<std::string> basis = {});

  /// Algebra spanned by the given linearly independent matrices (closed under products).
  static StructureConstantAlgebra from_matrices(const std::vector<RationalMatrix>& basis,
                                                std::vector<std::string> labels = {});
  /// M_d(ℚ) on the matrix units E_{ij}, ordered row-major.
  static StructureConstantAlgebra matrix_algebra(std::size_t d);
  /// The quaternion algebra (a, b): i² = a, j² = b, ij = -ji = k.
  static StructureConstantAlgebra quaternion(const Rational& a, const Rational& b);

  std::size_t dim() const { return dim_; }
  /// d with dim = d²; throws InvalidInput when dim is not a square.
  std::size_t degree() const;
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& table() const { return table_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<Rational>& unit() const { return unit_; }

 private:
  std::size_t dim_;
  std::vector<Rational> table_;
  std::vector<std::string> basis_;
  std::vector<Rational> unit_;
};

std::vector<Rational> sc_mul(const std::vector<Rational>& x, const std::vector<Rational>& y,
                             const StructureConstantAlgebra& a);
std::vector<Rational> sc_pow(const std::vector<Rational>& x, std::size_t k, const StructureConstantAlgebra& a);
Polynomial min_poly(const std::vector<Rational>& x, const StructureConstantAlgebra& a);

struct SearchOptions {
  /// Sampling attempts per search; 0 means 16·(dim A + 1).
  std::size_t max_tries = 0;
  /// Upper bound on |disc P| during the subalgebra search; nullopt disables the bound.
  std::optional<Integer> max_disc = Integer(1000000);
};

struct EtaleSubalgebra {
  std::vector<Rational> u;
  Polynomial p;
};

/// Random u with coordinates in {0..dim A} until its minimal polynomial is separable of degree d.
EtaleSubalgebra find_maximal_etale(const StructureConstantAlgebra& a, Rng& rng, const SearchOptions& opts = {});

/// Columns u^i·v·u^j at index i·d + j.
RationalMatrix embedding_matrix(const StructureConstantAlgebra& a, const std::vector<Rational>& u,
                                const std::vector<Rational>& v);
/// Whether the embedding matrix of v is invertible, i.e. A = F·v·F.
bool generates_bimodule(const StructureConstantAlgebra& a, const std::vector<Rational>& u,
                        const std::vector<Rational>& v);
std::vector<Rational> find_generator_v(const StructureConstantAlgebra& a, const std::vector<Rational>& u, Rng& rng,
                                       const SearchOptions& opts = {});

struct AmitsurPresentation {
  std::vector<Rational> u;
  EtaleAlgebraPtr f;
  Cocycle2 c;
  RationalMatrix e;
  std::vector<Rational> v;

  const Polynomial& p() const { return f->poly(); }
  /// e applied to a level-1 element: the corresponding coordinates in A.
  std::vector<Rational> to_algebra(const TensorElement& x) const;
};

AmitsurPresentation compute_cocycle(const StructureConstantAlgebra& a, const std::vector<Rational>& u,
                                    const Polynomial& p, const std::vector<Rational>& v);

/// Subalgebra search, generator search, then compute_cocycle. A supplied witness u replaces the first search.
AmitsurPresentation present(const StructureConstantAlgebra& a, RngSeed seed, const SearchOptions& opts = {},
                            const std::optional<std::vector<Rational>>& witness_u = std::nullopt);

/// e(x ·_c y) = e(x)·e(y) for every pair of monomial basis elements.
bool presentation_holds(const StructureConstantAlgebra& a, const AmitsurPresentation& pres);

}  // namespace amitsur
