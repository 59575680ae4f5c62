#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "amitsur/rational.hpp"

namespace amitsur {

/// Dense univariate polynomial over ℚ, coefficients lowest degree first.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t k);
  /// ∏ (X − r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  Rational leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws InvalidInput when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// gcd(P, P') = 1. Throws InvalidInput for constant P.
bool is_separable(const Polynomial& p);

/// Discriminant of a monic polynomial, computed as the determinant of the trace form.
Rational discriminant(const Polynomial& monic_p);

struct PolyFactor {
  Polynomial factor;
  unsigned multiplicity = 1;
  bool operator==(const PolyFactor&) const = default;
};

/// Irreducible monic factors over ℚ with multiplicities, sorted by degree then coefficients.
/// Squarefree decomposition, then modular factorisation, Hensel lifting and recombination.
std::vector<PolyFactor> poly_factor(const Polynomial& p);

}  // namespace amitsur
