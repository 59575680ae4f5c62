#pragma once

#include <compare>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "amitsur/rational.hpp"

namespace amitsur {

/// a + b√D. Rational numbers are carried with b = 0 (any D, conventionally 1).
class FieldElem {
 public:
  FieldElem() : a_(0), b_(0), d_(1) {}
  FieldElem(Rational a, Rational b, Integer d);
  static FieldElem rational(Rational a, Integer d = 1) { return FieldElem(std::move(a), 0, std::move(d)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& D() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  FieldElem conj() const { return FieldElem(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  Rational trace() const { return 2 * a_; }
  /// Throws NonUnit for zero.
  FieldElem inverse() const;
  FieldElem pow(long e) const;
  /// log|x| under the real embedding √D > 0 (D > 0), or log of the complex absolute value (D < 0).
  double log_abs() const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * y.inverse(); }
  friend FieldElem operator-(const FieldElem& x) { return FieldElem(-x.a_, -x.b_, x.d_); }
  /// Equality of values; D is ignored when both sides are rational.
  bool operator==(const FieldElem& o) const;

 private:
  void adopt(const FieldElem& o);
  Rational a_, b_;
  Integer d_;
};

std::string to_string(const FieldElem& x);

enum class PlaceKind { Rational, SplitPlus, SplitMinus, Inert, Ramified };
std::string to_string(PlaceKind k);

/// A prime of ℚ (kind Rational) or a prime ideal of a quadratic field.
struct PrimeIdeal {
  Integer p;
  PlaceKind kind = PlaceKind::Rational;
  auto operator<=>(const PrimeIdeal& o) const {
    if (auto c = cmp(p, o.p); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return kind <=> o.kind;
  }
  bool operator==(const PrimeIdeal& o) const { return p == o.p && kind == o.kind; }
};

/// Elements of O_K written as x + yω.
struct OmegaCoords {
  Integer x, y;
};

/// K = ℚ(√D), D squarefree, D ∉ {0, 1}. O_K = ℤ[ω] with ω = (1+√D)/2 when D ≡ 1 mod 4 and √D otherwise.
class QuadraticField {
 public:
  explicit QuadraticField(const Integer& d);
  QuadraticField(const QuadraticField&) = delete;
  QuadraticField& operator=(const QuadraticField&) = delete;

  const Integer& D() const { return d_; }
  /// Field discriminant Δ.
  const Integer& disc() const { return disc_; }
  bool is_real() const { return d_ > 0; }
  /// ω² = t·ω − n.
  const Integer& omega_trace() const { return t_; }
  const Integer& omega_norm() const { return n_; }

  FieldElem element(const Rational& a, const Rational& b = 0) const { return FieldElem(a, b, d_); }
  FieldElem omega() const;
  FieldElem from_omega(const Integer& x, const Integer& y) const;
  /// x = (X + Yω)/m with m > 0 minimal.
  OmegaCoords omega_coords(const FieldElem& x, Integer& m) const;
  Integer omega_norm_form(const Integer& x, const Integer& y) const;  // N(x + yω)

  std::vector<PrimeIdeal> primes_above(const Integer& p) const;
  /// Residue r with 𝔭 = (p, ω − r), for split and ramified primes.
  Integer residue_root(const PrimeIdeal& q) const;
  unsigned ramification_index(const Integer& p) const;
  Integer norm(const PrimeIdeal& q) const;
  PrimeIdeal conjugate(const PrimeIdeal& q) const;
  /// Valuation at q of a nonzero element.
  long valuation(const FieldElem& x, const PrimeIdeal& q) const;
  /// Rational primes at which x may have nonzero valuation.
  std::vector<Integer> support_primes(const FieldElem& x) const;

  unsigned torsion_order() const;
  FieldElem torsion_generator() const;
  /// Fundamental unit ε > 1 (real fields only), from the continued fraction of ω.
  const FieldElem& fundamental_unit() const;
  /// Class number, counted with reduced binary quadratic forms of discriminant Δ.
  const Integer& class_number() const;

  double minkowski_bound() const;
  double bach_bound() const;

 private:
  Integer d_, disc_, t_, n_;
  mutable std::once_flag unit_once_, h_once_;
  mutable FieldElem unit_;
  mutable Integer h_;
};

using QuadraticFieldPtr = std::shared_ptr<const QuadraticField>;

/// h⁺ for Δ > 0, number of ρ-cycles of reduced indefinite forms; h for Δ < 0, number of reduced forms.
Integer count_form_classes(const Integer& disc);

}  // namespace amitsur
