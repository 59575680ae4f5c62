#include <doctest.h>

#include "amitsur/errors.hpp"
#include "amitsur/etale.hpp"
#include "support.hpp"

using namespace amitsur;
using test::algebra;

TEST_CASE("tensor multiplication examples") {
  auto f = algebra({-2, 0, 1});
  auto x0 = TensorElement::variable(f, 0, 0);
  CHECK(x0 * x0 == TensorElement::one(f, 0) * Rational(2));
  auto x0x1 = TensorElement::variable(f, 1, 0) * TensorElement::variable(f, 1, 1);
  CHECK(x0x1 * x0x1 == TensorElement::one(f, 1) * Rational(4));
  Rng rng(RngSeed{1});
  auto a = test::random_element(f, 2, rng);
  CHECK(a * TensorElement::one(f, 2) == a);
}

TEST_CASE("tensor inversion") {
  auto f = algebra({-2, 0, 1});
  CHECK(tensor_inv(TensorElement::one(f, 1)).is_one());
  CHECK(tensor_inv(TensorElement::variable(f, 0, 0)) == TensorElement::variable(f, 0, 0) * Rational(1, 2));

  auto g = algebra({0, -1, 1});
  try {
    tensor_inv(TensorElement::variable(g, 0, 0));
    FAIL("expected NonUnit");
  } catch (const NonUnit& e) {
    REQUIRE(e.annihilator().size() == 2);
    TensorElement ann(g, 0, e.annihilator());
    CHECK(!ann.is_zero());
    CHECK((ann * TensorElement::variable(g, 0, 0)).is_zero());
  }

  Rng rng(RngSeed{2});
  for (auto p : {algebra({-2, 0, 1}), algebra({0, -1, 0, 1}), algebra({-2, 0, 0, 1})})
    for (unsigned level = 0; level < 3; ++level) {
      auto u = test::random_unit(p, level, rng);
      CHECK((u * tensor_inv(u)).is_one());
    }
}

TEST_CASE("face maps") {
  auto f = algebra({-2, 0, 1});
  CHECK(epsilon(0, TensorElement::variable(f, 0, 0)) == TensorElement::variable(f, 1, 1));
  CHECK(epsilon(1, TensorElement::variable(f, 0, 0)) == TensorElement::variable(f, 1, 0));
  auto x0x1 = TensorElement::variable(f, 1, 0) * TensorElement::variable(f, 1, 1);
  CHECK(epsilon(1, x0x1) == TensorElement::variable(f, 2, 0) * TensorElement::variable(f, 2, 2));
  CHECK_THROWS_AS(epsilon(3, x0x1), InvalidInput);
}

TEST_CASE("simplicial identities and ring homomorphism") {
  Rng rng(RngSeed{3});
  for (auto f : {algebra({-2, 0, 1}), algebra({0, -1, 0, 1}), algebra({1, 1, 1})})
    for (unsigned n = 0; n < 2; ++n) {
      auto a = test::random_element(f, n, rng);
      auto b = test::random_element(f, n, rng);
      for (unsigned i = 0; i <= n + 1; ++i) {
        CHECK(epsilon(i, a * b) == epsilon(i, a) * epsilon(i, b));
        for (unsigned j = i + 1; j <= n + 2; ++j) CHECK(epsilon(j, epsilon(i, a)) == epsilon(i, epsilon(j - 1, a)));
      }
    }
}

TEST_CASE("Amitsur differential") {
  auto f = algebra({-2, 0, 1});
  CHECK(delta(TensorElement::one(f, 1)).is_one());
  auto x0x1 = TensorElement::variable(f, 1, 0) * TensorElement::variable(f, 1, 1);
  CHECK(delta(TensorElement::variable(f, 0, 0)) == x0x1 * Rational(1, 2));

  Rng rng(RngSeed{4});
  for (auto g : {algebra({0, -1, 1}), algebra({-2, 0, 1}), algebra({0, -1, 0, 1})})
    for (unsigned n = 0; n < 2; ++n) {
      auto a = test::random_unit(g, n, rng);
      auto b = test::random_unit(g, n, rng);
      CHECK(delta(delta(a)).is_one());
      CHECK(delta(a * b) == delta(a) * delta(b));
    }
}

TEST_CASE("traces") {
  auto f = algebra({-2, 0, 1});
  CHECK(trace_F(TensorElement::one(f, 0)) == 2);
  CHECK(trace_F(TensorElement::variable(f, 0, 0)) == 0);
  CHECK(trace_F(TensorElement::variable(algebra({0, -1, 1}), 0, 0)) == 1);
  auto cube = algebra({-2, 0, 0, 1});
  auto x = TensorElement::variable(cube, 0, 0);
  CHECK(trace_F(x * x) == 0);
  CHECK(trace_F(x * x * x) == 6);

  CHECK(trace_r2_r1(TensorElement::variable(f, 2, 1)).is_zero());
  auto x0x2 = TensorElement::variable(f, 2, 0) * TensorElement::variable(f, 2, 2);
  CHECK(trace_r2_r1(x0x2) == TensorElement::variable(f, 1, 0) * TensorElement::variable(f, 1, 1) * Rational(2));

  Rng rng(RngSeed{5});
  for (auto g : {algebra({-2, 0, 1}), algebra({0, -1, 0, 1}), algebra({1, 1, 1})}) {
    auto a = test::random_element(g, 2, rng);
    auto b = test::random_element(g, 1, rng);
    CHECK(trace_r2_r1(epsilon(1, b) * a) == b * trace_r2_r1(a));
    CHECK(trace_r2_r1(epsilon(1, b)) == b * Rational(static_cast<long>(g->degree())));
  }
}
