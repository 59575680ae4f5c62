#include "amitsur/algebra.hpp"

#include <utility>

#include "amitsur/errors.hpp"
#include "amitsur/number_theory.hpp"

namespace amitsur {

namespace {

std::vector<Rational> basis_vector(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

std::size_t default_tries(const StructureConstantAlgebra& a, const SearchOptions& opts) {
  return opts.max_tries ? opts.max_tries : 16 * (a.dim() + 1);
}

std::vector<Rational> random_coords(std::size_t dim, Rng& rng) {
  std::vector<Rational> x(dim);
  for (auto& c : x) c = Rational(rng.uniform(0, static_cast<std::int64_t>(dim)));
  return x;
}

}  // namespace

StructureConstantAlgebra::StructureConstantAlgebra(std::size_t dim, std::vector<Rational> table,
                                                   std::vector<std::string> basis)
    : dim_(dim), table_(std::move(table)), basis_(std::move(basis)) {
  if (dim_ == 0) throw InvalidInput("algebra dimension must be positive");
  if (table_.size() != dim_ * dim_ * dim_) throw DimensionMismatch("structure table must have dim^3 entries");
  if (basis_.empty())
    for (std::size_t i = 0; i < dim_; ++i) basis_.push_back("b" + std::to_string(i));
  if (basis_.size() != dim_) throw DimensionMismatch("basis label count differs from dimension");

  const auto& t = *this;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t out = 0; out < dim_; ++out) {
          // ((b_i b_j) b_k)_out versus (b_i (b_j b_k))_out
          Rational lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < dim_; ++l) {
            if (t(i, j, l) != 0) lhs += t(i, j, l) * t(l, k, out);
            if (t(j, k, l) != 0) rhs += t(j, k, l) * t(i, l, out);
          }
          if (lhs != rhs) throw InvalidInput("structure constants are not associative");
        }

  RationalMatrix m(2 * dim_ * dim_, dim_);
  std::vector<Rational> rhs(2 * dim_ * dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        m(i * dim_ + k, j) = t(j, i, k);
        m(dim_ * dim_ + i * dim_ + k, j) = t(i, j, k);
      }
    rhs[i * dim_ + i] = 1;
    rhs[dim_ * dim_ + i * dim_ + i] = 1;
  }
  auto sol = solve_linear(m, rhs);
  if (!sol.consistent) throw InvalidInput("algebra has no two-sided unit");
  unit_ = std::move(sol.particular);
}

StructureConstantAlgebra StructureConstantAlgebra::from_matrices(const std::vector<RationalMatrix>& basis,
                                                                 std::vector<std::string> labels) {
  const std::size_t m = basis.size();
  if (m == 0) throw InvalidInput("empty matrix basis");
  std::vector<std::vector<Rational>> cols;
  for (const auto& b : basis) cols.push_back(b.entries());
  const RationalMatrix coords = RationalMatrix::from_columns(cols);
  std::vector<Rational> table(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const RationalMatrix prod = basis[i] * basis[j];
      auto sol = solve_linear(coords, prod.entries());
      if (!sol.consistent) throw InvalidInput("matrix span is not closed under multiplication");
      if (!sol.kernel.empty()) throw InvalidInput("matrix basis is linearly dependent");
      for (std::size_t k = 0; k < m; ++k) table[(i * m + j) * m + k] = sol.particular[k];
    }
  return StructureConstantAlgebra(m, std::move(table), std::move(labels));
}

StructureConstantAlgebra StructureConstantAlgebra::matrix_algebra(std::size_t d) {
  const std::size_t m = d * d;
  std::vector<Rational> table(m * m * m, Rational(0));
  std::vector<std::string> labels;
  // E_{ab}·E_{ce} = [b = c] E_{ae}
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
      for (std::size_t e = 0; e < d; ++e) table[((a * d + b) * m + (b * d + e)) * m + (a * d + e)] = 1;
    }
  return StructureConstantAlgebra(m, std::move(table), std::move(labels));
}

StructureConstantAlgebra StructureConstantAlgebra::quaternion(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw InvalidInput("quaternion parameters must be nonzero");
  std::vector<Rational> t(64, Rational(0));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) { t[(i * 4 + j) * 4 + k] = v; };
  // basis 1, i, j, k
  for (std::size_t x = 0; x < 4; ++x) {
    set(0, x, x, 1);
    set(x, 0, x, 1);
  }
  set(1, 1, 0, a);
  set(2, 2, 0, b);
  set(3, 3, 0, -a * b);
  set(1, 2, 3, 1);
  set(2, 1, 3, -1);
  set(1, 3, 2, a);
  set(3, 1, 2, -a);
  set(3, 2, 1, b);
  set(2, 3, 1, -b);
  return StructureConstantAlgebra(4, std::move(t), {"1", "i", "j", "k"});
}

std::size_t StructureConstantAlgebra::degree() const {
  const Integer r = isqrt(Integer(static_cast<unsigned long>(dim_)));
  if (r * r != static_cast<unsigned long>(dim_)) throw InvalidInput("algebra dimension is not a perfect square");
  return r.get_ui();
}

std::vector<Rational> sc_mul(const std::vector<Rational>& x, const std::vector<Rational>& y,
                             const StructureConstantAlgebra& a) {
  const std::size_t m = a.dim();
  if (x.size() != m || y.size() != m) throw DimensionMismatch("coordinate vector length differs from dimension");
  std::vector<Rational> out(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (y[j] == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < m; ++k)
        if (a(i, j, k) != 0) out[k] += xy * a(i, j, k);
    }
  }
  return out;
}

std::vector<Rational> sc_pow(const std::vector<Rational>& x, std::size_t k, const StructureConstantAlgebra& a) {
  std::vector<Rational> r = a.unit();
  for (std::size_t i = 0; i < k; ++i) r = sc_mul(r, x, a);
  return r;
}

Polynomial min_poly(const std::vector<Rational>& x, const StructureConstantAlgebra& a) {
  std::vector<std::vector<Rational>> powers{a.unit()};
  for (;;) {
    const std::vector<Rational> next = sc_mul(powers.back(), x, a);
    auto sol = solve_linear(RationalMatrix::from_columns(powers), next);
    if (sol.consistent) {
      std::vector<Rational> c(powers.size() + 1);
      for (std::size_t k = 0; k < powers.size(); ++k) c[k] = -sol.particular[k];
      c.back() = 1;
      return Polynomial(std::move(c));
    }
    powers.push_back(next);
  }
}

EtaleSubalgebra find_maximal_etale(const StructureConstantAlgebra& a, Rng& rng, const SearchOptions& opts) {
  const std::size_t d = a.degree();
  if (d == 1) return {a.unit(), Polynomial{Rational(-1), Rational(1)}};
  const std::size_t tries = default_tries(a, opts);
  std::size_t too_large = 0;
  for (std::size_t t = 0; t < tries; ++t) {
    auto u = random_coords(a.dim(), rng);
    Polynomial p = min_poly(u, a);
    if (p.degree() != static_cast<int>(d) || !is_separable(p)) continue;
    if (opts.max_disc && abs(discriminant(p)) > *opts.max_disc) {
      ++too_large;
      continue;
    }
    return {std::move(u), std::move(p)};
  }
  if (too_large > 0) throw DiscriminantTooLarge("every separable sample exceeded the discriminant bound");
  throw MaxTriesExceeded("no separable element of degree d found");
}

RationalMatrix embedding_matrix(const StructureConstantAlgebra& a, const std::vector<Rational>& u,
                                const std::vector<Rational>& v) {
  const std::size_t d = a.degree();
  std::vector<std::vector<Rational>> upow{a.unit()};
  for (std::size_t k = 1; k < d; ++k) upow.push_back(sc_mul(upow.back(), u, a));
  std::vector<std::vector<Rational>> cols;
  for (std::size_t i = 0; i < d; ++i) {
    const auto left = sc_mul(upow[i], v, a);
    for (std::size_t j = 0; j < d; ++j) cols.push_back(sc_mul(left, upow[j], a));
  }
  return RationalMatrix::from_columns(cols);
}

bool generates_bimodule(const StructureConstantAlgebra& a, const std::vector<Rational>& u,
                        const std::vector<Rational>& v) {
  return rank(embedding_matrix(a, u, v)) == a.dim();
}

std::vector<Rational> find_generator_v(const StructureConstantAlgebra& a, const std::vector<Rational>& u, Rng& rng,
                                       const SearchOptions& opts) {
  const std::size_t tries = default_tries(a, opts);
  for (std::size_t t = 0; t < tries; ++t) {
    auto v = random_coords(a.dim(), rng);
    if (generates_bimodule(a, u, v)) return v;
  }
  throw MaxTriesExceeded("no bimodule generator found");
}

std::vector<Rational> AmitsurPresentation::to_algebra(const TensorElement& x) const {
  if (x.level() != 1) throw InvalidInput("presentation maps level-1 elements");
  return e.apply(x.coeffs());
}

AmitsurPresentation compute_cocycle(const StructureConstantAlgebra& a, const std::vector<Rational>& u,
                                    const Polynomial& p, const std::vector<Rational>& v) {
  const std::size_t d = a.degree();
  if (p.degree() != static_cast<int>(d)) throw InvalidInput("minimal polynomial has the wrong degree");
  auto f = EtaleAlgebra::make(p);
  const RationalMatrix e = embedding_matrix(a, u, v);
  const RationalMatrix e_inv = inverse(e);

  std::vector<std::vector<Rational>> upow{a.unit()};
  for (std::size_t k = 1; k < d; ++k) upow.push_back(sc_mul(upow.back(), u, a));

  const auto& tau = f->power_traces();
  const auto& red = f->reduction();
  const std::size_t n2 = d * d, n3 = d * d * d;
  RationalMatrix sys(d * d * n3, n3);
  std::vector<Rational> rhs(d * d * n3);
  std::size_t block = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const auto uiv = sc_mul(upow[i], v, a);
    for (std::size_t i2 = 0; i2 < d; ++i2)
      for (std::size_t j2 = 0; j2 < d; ++j2, ++block) {
        // Tr_{2→1}(X_0^i · c · X_1^{i2} X_2^{j2}) = e^{-1}(u^i v · u^{i2} v u^{j2})
        const auto target = e_inv.apply(sc_mul(uiv, sc_mul(sc_mul(upow[i2], v, a), upow[j2], a), a));
        for (std::size_t k = 0; k < n2; ++k) rhs[block * n2 + k] = target[k];
        for (std::size_t al = 0; al < d; ++al)
          for (std::size_t be = 0; be < d; ++be) {
            const Rational& tr = tau[i2 + be];
            if (tr == 0) continue;
            for (std::size_t ga = 0; ga < d; ++ga) {
              const std::size_t col = (al * d + be) * d + ga;
              for (std::size_t s = 0; s < d; ++s) {
                if (red[i + al][s] == 0) continue;
                for (std::size_t t = 0; t < d; ++t)
                  if (red[j2 + ga][t] != 0) sys(block * n2 + s * d + t, col) += tr * red[i + al][s] * red[j2 + ga][t];
              }
            }
          }
      }
  }
  auto sol = solve_linear(sys, rhs);
  if (!sol.consistent) throw SingularSystem("cocycle system is inconsistent");
  if (!sol.kernel.empty()) throw SingularSystem("cocycle system does not determine c uniquely");

  AmitsurPresentation pres{u, f, Cocycle2(TensorElement(f, 2, std::move(sol.particular))), e, v};
  if (!pres.c.is_cocycle()) throw SingularSystem("solved element is not a cocycle");
  if (!presentation_holds(a, pres)) throw SingularSystem("presentation fails the homomorphism check");
  return pres;
}

AmitsurPresentation present(const StructureConstantAlgebra& a, RngSeed seed, const SearchOptions& opts,
                            const std::optional<std::vector<Rational>>& witness_u) {
  Rng rng(seed);
  const std::size_t d = a.degree();
  EtaleSubalgebra sub;
  if (witness_u) {
    if (witness_u->size() != a.dim()) throw DimensionMismatch("witness has the wrong length");
    sub = {*witness_u, min_poly(*witness_u, a)};
    if (sub.p.degree() != static_cast<int>(d) || !is_separable(sub.p))
      throw InvalidInput("witness does not generate a maximal etale subalgebra");
  } else {
    sub = find_maximal_etale(a, rng, opts);
  }
  const auto v = find_generator_v(a, sub.u, rng, opts);
  return compute_cocycle(a, sub.u, sub.p, v);
}

bool presentation_holds(const StructureConstantAlgebra& a, const AmitsurPresentation& pres) {
  const std::size_t n = pres.f->degree() * pres.f->degree();
  std::vector<TensorElement> basis;
  std::vector<std::vector<Rational>> images;
  for (std::size_t k = 0; k < n; ++k) {
    basis.emplace_back(pres.f, 1, basis_vector(n, k));
    images.push_back(pres.to_algebra(basis.back()));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pres.to_algebra(amitsur_mul(basis[i], basis[j], pres.c)) != sc_mul(images[i], images[j], a)) return false;
  return true;
}

}  // namespace amitsur
