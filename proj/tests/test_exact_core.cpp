#include <doctest.h>

#include "amitsur/errors.hpp"
#include "amitsur/integer_matrix.hpp"
#include "amitsur/matrix.hpp"
#include "amitsur/number_theory.hpp"
#include "amitsur/polynomial.hpp"
#include "amitsur/random.hpp"

using namespace amitsur;

namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

Polynomial product(const std::vector<PolyFactor>& fs) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& f : fs)
    for (unsigned i = 0; i < f.multiplicity; ++i) p = p * f.factor;
  return p;
}

}  // namespace

TEST_CASE("rational parsing round-trips and rejects junk") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
}

TEST_CASE("integer factorisation and valuations") {
  auto f = factor_integer(Integer(-360));
  REQUIRE(f.size() == 3);
  CHECK(f[0].prime == 2);
  CHECK(f[0].exponent == 3);
  CHECK(f[2].prime == 5);
  Integer big = Integer("1000000007") * Integer("998244353");
  auto g = factor_integer(big);
  REQUIRE(g.size() == 2);
  CHECK(g[0].prime == Integer("998244353"));
  CHECK(valuation(Rational(12, 25), Integer(5)) == -2);
  auto [s, r] = squarefree_decomposition(Integer(-72));
  CHECK(s == 6);
  CHECK(r == -2);
}

TEST_CASE("square roots modulo primes") {
  for (long p : {3L, 5L, 13L, 17L, 41L, 10007L}) {
    for (long a = 1; a < std::min(p, 60L); ++a) {
      if (kronecker(Integer(a), Integer(p)) != 1) continue;
      Integer r = sqrt_mod_prime(Integer(a), Integer(p));
      CHECK((r * r - a) % p == 0);
    }
  }
  CHECK(kronecker(Integer(5), Integer(2)) == -1);
  CHECK(kronecker(Integer(17), Integer(2)) == 1);
}

TEST_CASE("polynomial gcd and discriminant") {
  CHECK(poly_gcd(poly({0, -1, 0, 1}), poly({-1, 0, 1})) == poly({-1, 0, 1}));
  CHECK(discriminant(poly({-2, 0, 1})) == 8);
  CHECK(discriminant(poly({1, 1, 1})) == -3);
  // x^3 + x + 1 has discriminant -4 - 27.
  CHECK(discriminant(poly({1, 1, 0, 1})) == -31);
  CHECK(!is_separable(poly({1, 2, 1})));

  CHECK(poly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
  CHECK(poly_gcd(poly({1, 0, 1}), poly({0, 1})) == poly({1}));
  CHECK(is_separable(poly({-2, 0, 1})));
  CHECK(!is_separable(poly({0, 0, 1})));
  CHECK(is_separable(poly({0, -1, 1})));

  Rng rng(RngSeed{12});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> a(4), b(3);
    for (auto& x : a) x = Rational(rng.uniform(-5, 5));
    for (auto& x : b) x = Rational(rng.uniform(-5, 5));
    a.back() = 1;
    const Polynomial p(a), q(b);
    if (q.is_zero()) continue;
    CHECK(poly_gcd(p * q, p) == p.monic());
  }
}

TEST_CASE("factorisation over the rationals") {
  auto quad = poly_factor(poly({0, -1, 1}));
  REQUIRE(quad.size() == 2);
  CHECK(quad[0].factor * quad[1].factor == poly({0, -1, 1}));
  CHECK(((quad[0].factor == poly({0, 1}) && quad[1].factor == poly({-1, 1})) ||
         (quad[1].factor == poly({0, 1}) && quad[0].factor == poly({-1, 1}))));
  CHECK(poly_factor(poly({1, 0, 1})) == std::vector<PolyFactor>{{poly({1, 0, 1}), 1}});
  auto biquad = poly_factor(poly({6, 0, -5, 0, 1}));
  REQUIRE(biquad.size() == 2);
  CHECK(biquad[0].factor * biquad[1].factor == poly({6, 0, -5, 0, 1}));
  CHECK((biquad[0].factor == poly({-2, 0, 1}) || biquad[0].factor == poly({-3, 0, 1})));
  CHECK(biquad[0].multiplicity == 1);

  auto fs = poly_factor(poly({-1, 0, 0, 0, 1}));
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].factor.degree() == 1);
  CHECK(fs[2].factor == poly({1, 0, 1}));

  // x^4 + 1 is irreducible over ℚ but splits modulo every prime.
  CHECK(poly_factor(poly({1, 0, 0, 0, 1})).size() == 1);
  // x^4 - 10x^2 + 1, the minimal polynomial of √2 + √3.
  CHECK(poly_factor(poly({1, 0, -10, 0, 1})).size() == 1);

  const Polynomial p = poly({-2, 0, 1}) * poly({3, 1}) * poly({3, 1}) * poly({5, 0, 0, 1}) * poly({1, 1, 1});
  auto g = poly_factor(p * Rational(7, 3));
  CHECK(product(g) == p.monic());
  CHECK(g.size() == 4);

  Rng rng(RngSeed{11});
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial q = Polynomial::constant(1);
    std::vector<Polynomial> parts;
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> c;
      const int deg = static_cast<int>(rng.uniform(1, 3));
      for (int i = 0; i < deg; ++i) c.emplace_back(rng.uniform(-9, 9));
      c.emplace_back(1);
      q = q * Polynomial(c);
    }
    auto fs2 = poly_factor(q);
    CHECK(product(fs2) == q);
    for (const auto& f : fs2)
      if (f.factor.degree() == 2) {
        INFO(to_string(f.factor.coeff(0)), " ", to_string(f.factor.coeff(1)));
        CHECK(!is_square(discriminant(f.factor).get_num()));
      }
  }
}

TEST_CASE("rational linear solve") {
  // 3x3 Hilbert matrix against (1,1,1).
  RationalMatrix h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = Rational(1, i + j + 1);
  std::vector<Rational> b(3, Rational(1));
  auto sol = solve_linear(h, b);
  REQUIRE(sol.consistent);
  CHECK(sol.particular == std::vector<Rational>{Rational(3), Rational(-24), Rational(30)});
  const auto e1 = solve_linear(h, std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
  CHECK(e1.particular == std::vector<Rational>{Rational(9), Rational(-36), Rational(30)});
  CHECK(e1.kernel.empty());

  const auto id = solve_linear(RationalMatrix::identity(3), b);
  CHECK(id.particular == b);
  const auto line = solve_linear(RationalMatrix(1, 2, {Rational(1), Rational(1)}), std::vector<Rational>{Rational(1)});
  REQUIRE(line.consistent);
  CHECK(line.particular[0] + line.particular[1] == 1);
  CHECK(line.kernel.size() == 1);
  CHECK(inverse(h) * h == RationalMatrix::identity(3));
  CHECK(determinant(h) == Rational(1, 2160));

  RationalMatrix m(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)});
  std::vector<Rational> rhs{Rational(1), Rational(3)};
  auto bad = solve_linear(m, rhs);
  REQUIRE(!bad.consistent);
  CHECK(m.transpose().apply(bad.certificate) == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(bad.certificate[0] * 1 + bad.certificate[1] * 3 == 1);
  CHECK(kernel(m).size() == 1);
  CHECK_THROWS_AS(inverse(m), SingularSystem);
}

TEST_CASE("Smith normal form") {
  IntegerMatrix a(2, 2, {Integer(2), Integer(4), Integer(6), Integer(8)});
  auto s = smith_normal_form(a);
  CHECK(s.invariants() == std::vector<Integer>{Integer(2), Integer(4)});
  CHECK(s.u * a * s.v == s.d);

  IntegerMatrix b(2, 3, {Integer(2), Integer(0), Integer(0), Integer(0), Integer(3), Integer(0)});
  auto t = smith_normal_form(b);
  CHECK(t.invariants() == std::vector<Integer>{Integer(1), Integer(6)});
  CHECK(t.u * b * t.v == t.d);

  auto diag = smith_normal_form(IntegerMatrix(2, 2, {Integer(2), Integer(0), Integer(0), Integer(3)}));
  CHECK(diag.invariants() == std::vector<Integer>{Integer(1), Integer(6)});
  auto zero = smith_normal_form(IntegerMatrix(2, 3));
  CHECK(zero.d == IntegerMatrix(2, 3));
  CHECK(zero.u == IntegerMatrix::identity(2));
  CHECK(zero.v == IntegerMatrix::identity(3));

  Rng rng(RngSeed{3});
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5)), c = static_cast<std::size_t>(rng.uniform(1, 5));
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-20, 20);
    auto f = smith_normal_form(m);
    CHECK(f.u * m * f.v == f.d);
    CHECK(abs(determinant(f.u)) == 1);
    CHECK(abs(determinant(f.v)) == 1);
    auto inv = f.invariants();
    for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
      CHECK(inv[i] >= 0);
      if (inv[i] != 0) CHECK(inv[i + 1] % inv[i] == 0);
      else CHECK(inv[i + 1] == 0);
    }
    if (r == c) {
      Integer prod = 1;
      for (auto& x : inv) prod *= x;
      CHECK(abs(determinant(m)) == prod);
    }
  }
}

TEST_CASE("integer solve with insolubility certificate") {
  IntegerMatrix a(2, 2, {Integer(2), Integer(0), Integer(0), Integer(3)});
  std::vector<Integer> ok{Integer(4), Integer(9)};
  auto s = solve_integer(a, ok);
  REQUIRE(s.soluble);
  CHECK(a.apply(s.particular) == ok);

  std::vector<Integer> no{Integer(1), Integer(3)};
  auto n = solve_integer(a, no);
  REQUIRE(!n.soluble);
  REQUIRE(n.modulus != 0);
  Integer yb = n.certificate[0] * 1 + n.certificate[1] * 3;
  CHECK(yb % n.modulus != 0);
  for (std::size_t j = 0; j < 2; ++j) {
    Integer col = n.certificate[0] * a(0, j) + n.certificate[1] * a(1, j);
    CHECK(col % n.modulus == 0);
  }
}
