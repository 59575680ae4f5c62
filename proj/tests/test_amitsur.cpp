#include <doctest.h>

#include "amitsur/amitsur.hpp"
#include "amitsur/errors.hpp"
#include "support.hpp"

using namespace amitsur;
using test::algebra;

namespace {

TensorElement pure(const EtaleAlgebraPtr& f, unsigned j, unsigned k) {
  const unsigned e[] = {j, k};
  return TensorElement::monomial(f, e);
}

RationalMatrix matrix(std::size_t n, std::initializer_list<long> v) {
  std::vector<Rational> e;
  for (long x : v) e.emplace_back(x);
  return RationalMatrix(n, n, std::move(e));
}

RationalMatrix psi_matrix(const TensorElement& x, const std::vector<Rational>& roots) {
  const std::size_t d = roots.size();
  return RationalMatrix(d, d, psi(x, roots));
}

}  // namespace

TEST_CASE("products in A(F,1)") {
  auto f = algebra({-2, 0, 1});
  auto c = Cocycle2::trivial(f);
  CHECK(amitsur_mul(pure(f, 0, 1), pure(f, 1, 0), c) == TensorElement::one(f, 1) * Rational(4));
  auto g = algebra({0, -1, 1});
  CHECK(amitsur_mul(pure(g, 0, 1), pure(g, 1, 0), Cocycle2::trivial(g)).is_one());

  auto unit = amitsur_unit(c);
  CHECK(unit == pure(f, 0, 0) * Rational(1, 2) + pure(f, 1, 1) * Rational(1, 4));
  Rng rng(RngSeed{10});
  auto a = test::random_element(f, 1, rng);
  CHECK(amitsur_mul(a, unit, c) == a);
  CHECK(amitsur_mul(unit, a, c) == a);
}

TEST_CASE("trivial cocycle matrix model") {
  auto f = algebra({-2, 0, 1});
  CHECK(trivial_matrix_iso(pure(f, 0, 1)) == matrix(2, {0, 4, 0, 0}));
  CHECK(trivial_matrix_iso(pure(f, 1, 0)) == matrix(2, {0, 0, 2, 0}));
  CHECK(trivial_matrix_iso(amitsur_unit(Cocycle2::trivial(f))) == RationalMatrix::identity(2));

  Rng rng(RngSeed{11});
  for (auto g : {algebra({-2, 0, 1}), algebra({0, -1, 1}), algebra({0, -1, 0, 1}), algebra({-2, 0, 0, 1})}) {
    auto c = Cocycle2::trivial(g);
    for (int t = 0; t < 10; ++t) {
      auto x = test::random_element(g, 1, rng);
      auto y = test::random_element(g, 1, rng);
      CHECK(trivial_matrix_iso(amitsur_mul(x, y, c)) == trivial_matrix_iso(x) * trivial_matrix_iso(y));
    }
  }
}

TEST_CASE("associativity over coboundaries and twisted cocycles") {
  Rng rng(RngSeed{12});
  for (auto g : {algebra({-2, 0, 1}), algebra({0, -1, 0, 1}), algebra({1, 1, 1})}) {
    const Cocycle2 c = Cocycle2::checked(delta(test::random_unit(g, 1, rng)));
    auto x = test::random_element(g, 1, rng);
    auto y = test::random_element(g, 1, rng);
    auto z = test::random_element(g, 1, rng);
    CHECK(amitsur_mul(amitsur_mul(x, y, c), z, c) == amitsur_mul(x, amitsur_mul(y, z, c), c));
    auto e = amitsur_unit(c);
    CHECK(amitsur_mul(e, x, c) == x);
  }
}

TEST_CASE("twisting by a cochain") {
  Rng rng(RngSeed{13});
  for (auto g : {algebra({-2, 0, 1}), algebra({0, -1, 0, 1})}) {
    auto one = TensorElement::one(g, 1);
    auto x = test::random_element(g, 1, rng);
    CHECK(twist_by_cochain(x, one) == x);

    const Cocycle2 c = Cocycle2::trivial(g);
    auto a = test::random_unit(g, 1, rng);
    const Cocycle2 twisted(c.value() * delta(a));
    auto y = test::random_element(g, 1, rng);
    CHECK(twist_by_cochain(amitsur_mul(x, y, c), a) ==
          amitsur_mul(twist_by_cochain(x, a), twist_by_cochain(y, a), twisted));

    auto b = test::random_unit(g, 1, rng);
    CHECK(twist_by_cochain(twist_by_cochain(x, a), b) == twist_by_cochain(x, a * b));

    // x ↦ M(x·a) is then multiplicative A(F,Δ(a)) → M_d(ℚ).
    const Cocycle2 cob(delta(a));
    auto to_matrix = [&](const TensorElement& m) { return trivial_matrix_iso(twist_by_cochain(m, tensor_inv(a))); };
    CHECK(to_matrix(amitsur_mul(x, y, cob)) == to_matrix(x) * to_matrix(y));
  }
}

TEST_CASE("psi evaluations") {
  auto g = algebra({0, -1, 1});
  const std::vector<Rational> roots{Rational(0), Rational(1)};
  CHECK(psi(TensorElement::variable(g, 0, 0), roots) == std::vector<Rational>{Rational(0), Rational(1)});
  auto x0x1 = TensorElement::variable(g, 1, 0) * TensorElement::variable(g, 1, 1);
  CHECK(psi(x0x1, roots) == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(psi(TensorElement::one(g, 2), roots) == std::vector<Rational>(8, Rational(1)));
  CHECK_THROWS_AS(psi(x0x1, {Rational(0), Rational(0)}), InvalidInput);
  CHECK_THROWS_AS(psi(x0x1, {Rational(0), Rational(2)}), InvalidInput);
}

TEST_CASE("Brauer products and reduction") {
  const std::vector<Rational> roots{Rational(0), Rational(1)};
  const FactorSet ones{roots, std::vector<Rational>(8, Rational(1))};
  const auto l = matrix(2, {1, 1, 1, 1});
  CHECK(brauer_mul(l, l, ones) == matrix(2, {2, 2, 2, 2}));
  const auto m = matrix(2, {1, 2, 3, 4});
  CHECK(brauer_mul(m, l, ones) == m * l);

  auto same = reduce_factor_set(ones);
  CHECK(same.reduced.values == ones.values);
  CHECK(same.cochain == matrix(2, {1, 1, 1, 1}));

  // A cocycle with c_{111} = 5: the coboundary of a diagonal cochain.
  const std::vector<Rational> diag{Rational(1), Rational(1), Rational(1), Rational(5)};
  FactorSet five{roots, brauer_differential(diag, 2, 1)};
  REQUIRE(five(1, 1, 1) == 5);
  REQUIRE(five.is_cocycle());
  auto red = reduce_factor_set(five);
  CHECK(red.cochain(1, 1) == Rational(1, 5));
  CHECK(red.reduced(0, 0, 0) == 1);
  CHECK(red.reduced(1, 1, 1) == 1);
  CHECK(red.reduced.is_cocycle());
  CHECK(reduce_factor_set(red.reduced).reduced.values == red.reduced.values);
}

TEST_CASE("split-case bridge") {
  Rng rng(RngSeed{14});
  const std::vector<std::pair<EtaleAlgebraPtr, std::vector<Rational>>> cases{
      {algebra({0, -1, 1}), {Rational(0), Rational(1)}},
      {algebra({0, -1, 0, 1}), {Rational(-1), Rational(0), Rational(1)}},
  };
  for (const auto& [g, roots] : cases) {
    const std::size_t d = roots.size();
    for (unsigned n = 0; n < 2; ++n) {
      auto a = test::random_unit(g, n, rng);
      CHECK(psi(delta(a), roots) == brauer_differential(psi(a, roots), d, n));
    }
    const Cocycle2 c(delta(test::random_unit(g, 1, rng)));
    const FactorSet fs = factor_set_of(c, roots);
    CHECK(fs.is_cocycle());
    auto x = test::random_element(g, 1, rng);
    auto y = test::random_element(g, 1, rng);
    CHECK(psi_matrix(amitsur_mul(x, y, c), roots) == brauer_mul(psi_matrix(x, roots), psi_matrix(y, roots), fs));
  }
}
