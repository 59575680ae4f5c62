#include "amitsur/amitsur.hpp"

#include <utility>

#include "amitsur/errors.hpp"

namespace amitsur {

Cocycle2::Cocycle2(TensorElement value) : value_(std::move(value)) {
  if (value_.level() != 2) throw InvalidInput("a 2-cocycle lives at level 2");
}

Cocycle2 Cocycle2::checked(TensorElement value) {
  Cocycle2 c(std::move(value));
  if (!c.is_cocycle()) throw InvalidInput("element does not satisfy the cocycle condition");
  return c;
}

Cocycle2 Cocycle2::trivial(const EtaleAlgebraPtr& f) { return Cocycle2(TensorElement::one(f, 2)); }

bool Cocycle2::is_cocycle() const {
  try {
    return delta(value_).is_one();
  } catch (const NonUnit&) {
    return false;
  }
}

TensorElement amitsur_mul(const TensorElement& a, const TensorElement& b, const Cocycle2& c) {
  if (a.level() != 1 || b.level() != 1) throw InvalidInput("A(F,c) elements live at level 1");
  return trace_r2_r1(epsilon(2, a) * c.value() * epsilon(0, b));
}

TensorElement amitsur_unit(const Cocycle2& c) {
  const auto& f = c.value().algebra();
  const std::size_t n = c.value().degree() * c.value().degree();
  std::vector<TensorElement> basis;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    basis.emplace_back(f, 1, std::move(e));
  }
  // Rows (side, i, coordinate), unknown coefficient j of the unit.
  RationalMatrix m(2 * n * n, n);
  std::vector<Rational> rhs(2 * n * n, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const TensorElement left = amitsur_mul(basis[j], basis[i], c);
      const TensorElement right = amitsur_mul(basis[i], basis[j], c);
      for (std::size_t t = 0; t < n; ++t) {
        m(i * n + t, j) = left[t];
        m(n * n + i * n + t, j) = right[t];
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i * n + i] = 1;
    rhs[n * n + i * n + i] = 1;
  }
  auto sol = solve_linear(m, rhs);
  if (!sol.consistent || !sol.kernel.empty()) throw SingularSystem("A(F,c) has no unique two-sided unit");
  return TensorElement(f, 1, std::move(sol.particular));
}

RationalMatrix trivial_matrix_iso(const TensorElement& a) {
  if (a.level() != 1) throw InvalidInput("trivial_matrix_iso expects a level-1 element");
  const std::size_t d = a.degree();
  const auto& tau = a.field().power_traces();
  RationalMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& t = a[j * d + k];
      if (t == 0) continue;
      for (std::size_t l = 0; l < d; ++l) out(j, l) += t * tau[k + l];
    }
  return out;
}

TensorElement twist_by_cochain(const TensorElement& m, const TensorElement& a) {
  if (m.level() != 1 || a.level() != 1) throw InvalidInput("twists act on level-1 elements");
  return m * tensor_inv(a);
}

}  // namespace amitsur
