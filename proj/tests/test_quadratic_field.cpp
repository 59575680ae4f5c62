#include <doctest.h>

#include <cmath>
#include <numbers>

#include "amitsur/number_theory.hpp"
#include "amitsur/quadratic_field.hpp"

using namespace amitsur;

namespace {

// Analytic class number formula, used as an independent oracle.
double analytic_class_number(const QuadraticField& k) {
  const long disc = k.disc().get_si();
  const long n = std::labs(disc);
  double sum = 0;
  if (disc < 0) {
    for (long a = 1; a < n; ++a) sum += kronecker(Integer(disc), Integer(a)) * a;
    return -static_cast<double>(k.torsion_order()) * sum / (2.0 * n);
  }
  for (long a = 1; a < n; ++a)
    sum += kronecker(Integer(disc), Integer(a)) * std::log(std::sin(std::numbers::pi * a / n));
  return -0.5 * sum / k.fundamental_unit().log_abs();
}

// Smallest unit x + yω > 1 with y > 0, by brute force over y: x solves x² + tyx + ny² ∓ 1 = 0.
FieldElem brute_force_unit(const QuadraticField& k) {
  const Integer& t = k.omega_trace();
  const Integer& n = k.omega_norm();
  for (Integer y = 1;; ++y)
    for (int s : {1, -1}) {
      const Integer disc = t * t * y * y - 4 * (n * y * y - s);
      if (disc < 0 || !is_square(disc)) continue;
      for (int sign : {1, -1}) {
        const Integer num = -t * y + sign * isqrt(disc);
        if (num % 2 != 0) continue;
        FieldElem e = k.from_omega(num / 2, y);
        if (e.log_abs() > 0) return e;
      }
    }
}

}  // namespace

TEST_CASE("field element arithmetic") {
  const QuadraticField k(Integer(-5));
  const FieldElem x = k.element(2, 3), y = k.element(Rational(1, 2), -1);
  CHECK((x * y).norm() == x.norm() * y.norm());
  CHECK(x * x.inverse() == k.element(1));
  CHECK((x / y) * y == x);
  CHECK(x.pow(3) == x * x * x);
  CHECK(x.pow(-2) * x.pow(2) == k.element(1));
  CHECK(FieldElem::rational(3) * x == k.element(6, 9));
  CHECK(std::fabs(k.element(3, 4).log_abs() - 0.5 * std::log(9.0 + 80.0)) < 1e-12);
  const QuadraticField r(Integer(2));
  const FieldElem small = r.element(1, -1);  // √2 − 1 in absolute value
  CHECK(std::fabs(small.log_abs() - std::log(std::sqrt(2.0) - 1)) < 1e-12);
}

TEST_CASE("prime decomposition and valuations") {
  const QuadraticField k(Integer(-5));
  CHECK(k.disc() == -20);
  CHECK(k.primes_above(2).front().kind == PlaceKind::Ramified);
  CHECK(k.primes_above(3).size() == 2);
  CHECK(k.primes_above(11).front().kind == PlaceKind::Inert);

  const QuadraticField q2(Integer(2));
  CHECK(q2.valuation(q2.element(0, 1), {2, PlaceKind::Ramified}) == 1);
  CHECK(q2.valuation(q2.element(Rational(1, 2)), {2, PlaceKind::Ramified}) == -2);

  const QuadraticField q17(Integer(17));  // 2 splits since 17 ≡ 1 mod 8
  CHECK(q17.primes_above(2).size() == 2);
  const QuadraticField q5(Integer(5));  // 2 is inert since 5 ≡ 5 mod 8
  CHECK(q5.primes_above(2).front().kind == PlaceKind::Inert);

  // Valuations at split primes add up to the norm valuation and swap under conjugation.
  for (long d : {-5L, -23L, 17L, 10L, -3L, 79L}) {
    const QuadraticField f{Integer(d)};
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y) {
        const FieldElem e = f.from_omega(x, y) * f.element(Rational(1, 6));
        if (e.is_zero()) continue;
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
          long total = 0;
          for (const auto& q : f.primes_above(p)) {
            const long v = f.valuation(e, q);
            total += v * (q.kind == PlaceKind::Inert ? 2 : 1);
            CHECK(f.valuation(e.conj(), f.conjugate(q)) == v);
          }
          CHECK(total == valuation(e.norm(), Integer(p)));
        }
      }
  }
}

TEST_CASE("fundamental units") {
  CHECK(QuadraticField(Integer(2)).fundamental_unit() == QuadraticField(Integer(2)).element(1, 1));
  const QuadraticField k5(Integer(5));
  CHECK(k5.fundamental_unit() == k5.element(Rational(1, 2), Rational(1, 2)));
  const QuadraticField k34(Integer(34));
  CHECK(k34.fundamental_unit() == k34.element(35, 6));
  for (long d : {3L, 6L, 7L, 11L, 13L, 21L, 29L, 46L, 53L, 61L, 94L}) {
    const QuadraticField k{Integer(d)};
    const FieldElem e = k.fundamental_unit();
    CHECK(abs(e.norm()) == 1);
    CHECK(e == brute_force_unit(k));
  }
}

TEST_CASE("class numbers agree with the analytic formula") {
  CHECK(QuadraticField(Integer(-5)).class_number() == 2);
  CHECK(QuadraticField(Integer(2)).class_number() == 1);
  for (long d : {-1L, -2L, -3L, -5L, -6L, -14L, -23L, -47L, -71L, -163L, -199L, -1001L, -3001L, 2L, 3L, 5L, 10L,
                 15L, 34L, 79L, 82L, 226L, 223L, 401L, 1001L, 3001L}) {
    if (squarefree_decomposition(Integer(d)).first != 1) continue;
    const QuadraticField k{Integer(d)};
    INFO("D = ", d);
    CHECK(std::fabs(k.class_number().get_d() - analytic_class_number(k)) < 1e-6);
  }
}
