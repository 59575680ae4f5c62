#include <doctest.h>

#include "amitsur/algebra.hpp"
#include "amitsur/errors.hpp"
#include "support.hpp"

using namespace amitsur;

namespace {

std::vector<Rational> vec(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("structure constant products") {
  const auto m2 = StructureConstantAlgebra::matrix_algebra(2);
  CHECK(m2.unit() == vec({1, 0, 0, 1}));
  const auto e12 = vec({0, 1, 0, 0}), e21 = vec({0, 0, 1, 0});
  CHECK(sc_mul(e12, e21, m2) == vec({1, 0, 0, 0}));
  CHECK(sc_mul(e12, e12, m2) == vec({0, 0, 0, 0}));
  const auto y = vec({3, -1, 4, 1});
  CHECK(sc_mul(m2.unit(), y, m2) == y);
  CHECK_THROWS_AS(sc_mul(vec({1}), y, m2), DimensionMismatch);
}

TEST_CASE("load-time validation") {
  std::vector<Rational> bad(8, Rational(0));
  bad[0] = 1;  // b0·b0 = b0
  bad[(1 * 2 + 1) * 2 + 0] = 1;  // b1·b1 = b0, nothing else: no unit
  CHECK_THROWS_AS(StructureConstantAlgebra(2, bad), InvalidInput);
  CHECK_THROWS_AS(StructureConstantAlgebra(2, std::vector<Rational>(7)), DimensionMismatch);

  // Non-associative: b1·b1 = b1 + b0 but b0 is not a unit.
  std::vector<Rational> t(8, Rational(0));
  t[0] = 1;
  t[(0 * 2 + 1) * 2 + 1] = 1;
  t[(1 * 2 + 0) * 2 + 0] = 1;
  t[(1 * 2 + 1) * 2 + 1] = 1;
  CHECK_THROWS_AS(StructureConstantAlgebra(2, t), InvalidInput);
}

TEST_CASE("minimal polynomials") {
  const auto m2 = StructureConstantAlgebra::matrix_algebra(2);
  CHECK(min_poly(m2.unit(), m2) == test::poly({-1, 1}));
  CHECK(min_poly(vec({0, 0, 0, 1}), m2) == test::poly({0, -1, 1}));
  CHECK(min_poly(vec({0, 1, 0, 0}), m2) == test::poly({0, 0, 1}));
  const auto h = StructureConstantAlgebra::quaternion(-1, -1);
  CHECK(min_poly(vec({0, 1, 0, 0}), h) == test::poly({1, 0, 1}));
}

TEST_CASE("maximal etale subalgebra search") {
  const auto m2 = StructureConstantAlgebra::matrix_algebra(2);
  Rng rng(RngSeed{0});
  auto sub = find_maximal_etale(m2, rng);
  CHECK(sub.p.degree() == 2);
  CHECK(is_separable(sub.p));
  CHECK(rank(RationalMatrix::from_columns({m2.unit(), sub.u})) == 2);

  const StructureConstantAlgebra q(1, {Rational(1)});
  auto one = find_maximal_etale(q, rng);
  CHECK(one.u == vec({1}));
  CHECK(one.p == test::poly({-1, 1}));

  const StructureConstantAlgebra five(5, [] {
    std::vector<Rational> t(125, Rational(0));
    for (std::size_t i = 0; i < 5; ++i) t[(0 * 5 + i) * 5 + i] = t[(i * 5 + 0) * 5 + i] = 1;
    return t;
  }());
  CHECK_THROWS_AS(find_maximal_etale(five, rng), InvalidInput);
}

TEST_CASE("bimodule generator acceptance") {
  const auto m2 = StructureConstantAlgebra::matrix_algebra(2);
  const auto u = vec({0, 0, 0, 1});
  CHECK(generates_bimodule(m2, u, vec({1, 1, 1, 1})));
  CHECK(!generates_bimodule(m2, u, vec({0, 1, 1, 0})));
}

TEST_CASE("cocycle of M2 with the all-ones generator is trivial") {
  const auto m2 = StructureConstantAlgebra::matrix_algebra(2);
  const auto pres = compute_cocycle(m2, vec({0, 0, 0, 1}), test::poly({0, -1, 1}), vec({1, 1, 1, 1}));
  CHECK(pres.c.value().is_one());
  CHECK(presentation_holds(m2, pres));
}

TEST_CASE("presentations of matrix and quaternion algebras") {
  for (std::size_t d : {1u, 2u, 3u}) {
    const auto md = StructureConstantAlgebra::matrix_algebra(d);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto pres = present(md, RngSeed{seed});
      CHECK(pres.c.is_cocycle());
      CHECK(presentation_holds(md, pres));
      CHECK(pres.p().degree() == static_cast<int>(d));
    }
  }
  const auto h = StructureConstantAlgebra::quaternion(-1, -1);
  const auto pres = present(h, RngSeed{1});
  CHECK(pres.c.is_cocycle());
  CHECK(presentation_holds(h, pres));

  const auto again = present(h, RngSeed{1});
  CHECK(again.c.value() == pres.c.value());
  CHECK(again.u == pres.u);
}

TEST_CASE("witness replaces the subalgebra search") {
  const auto m3 = StructureConstantAlgebra::matrix_algebra(3);
  const auto w = vec({1, 0, 0, 0, 2, 0, 0, 0, -1});
  const auto pres = present(m3, RngSeed{4}, {}, w);
  CHECK(pres.u == w);
  CHECK(pres.p() == test::poly({2, -1, -2, 1}));
  CHECK(presentation_holds(m3, pres));
  CHECK_THROWS_AS(present(m3, RngSeed{4}, {}, vec({1, 0, 0, 0, 1, 0, 0, 0, 2})), InvalidInput);
}

TEST_CASE("a perturbed cocycle breaks the homomorphism identity") {
  const auto m2 = StructureConstantAlgebra::matrix_algebra(2);
  auto pres = present(m2, RngSeed{2});
  auto coeffs = pres.c.value().coeffs();
  coeffs[3] += 1;
  pres.c = Cocycle2(TensorElement(pres.f, 2, coeffs));
  CHECK(!presentation_holds(m2, pres));
}
