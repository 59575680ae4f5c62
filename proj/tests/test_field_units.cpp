#include <doctest.h>

#include <memory>

#include "amitsur/errors.hpp"
#include "amitsur/field_units.hpp"
#include "amitsur/number_theory.hpp"
#include "amitsur/random.hpp"

using namespace amitsur;

namespace {

QuadraticFieldPtr field(long d) { return std::make_shared<const QuadraticField>(Integer(d)); }

// Product of (class representatives)^k is principal iff k is a multiple of the order; we check
// this through the S-unit machinery: an ideal combination is principal iff its valuation vector
// lies in the lattice spanned by the valuations of S-units.
bool principal(const QuadraticFieldPtr& k, const IdealCombination& combo) {
  std::vector<Integer> primes;
  for (const auto& [q, e] : combo) primes.push_back(q.p);
  FieldSUnits su(k, primes);
  std::vector<Integer> target(su.places().size(), Integer(0));
  for (const auto& [q, e] : combo)
    for (std::size_t i = 0; i < su.places().size(); ++i)
      if (su.places()[i] == q) target[i] += e;
  const auto& b = su.valuation_basis();
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (!mpz_divisible_p(target[i].get_mpz_t(), b[i][i].get_mpz_t())) return false;
    const Integer c = target[i] / b[i][i];
    for (std::size_t j = i; j < target.size(); ++j) target[j] -= c * b[i][j];
  }
  return true;
}

}  // namespace

TEST_CASE("class group of Q(sqrt -5) has order 2") {
  auto k = field(-5);
  const ClassGroup cl = class_group(k);
  CHECK(cl.order == 2);
  REQUIRE(cl.invariants == std::vector<Integer>{2});
  REQUIRE(cl.generators.size() == 1);
  CHECK_FALSE(principal(k, cl.generators[0]));
  IdealCombination sq = cl.generators[0];
  for (auto& [q, e] : sq) e *= 2;
  CHECK(principal(k, sq));
  CHECK(cl.generating_primes() == std::vector<Integer>{2});
}

TEST_CASE("class group structure for non-cyclic and larger examples") {
  // Q(sqrt -21): (Z/2)^2; Q(sqrt -23): Z/3; Q(sqrt -47): Z/5; Q(sqrt 10): Z/2; Q(sqrt 79): Z/3.
  struct Row {
    long d;
    std::vector<long> inv;
  };
  for (const Row& r : {Row{-21, {2, 2}}, Row{-23, {3}}, Row{-47, {5}}, Row{10, {2}}, Row{79, {3}}, Row{-1, {}},
                       Row{2, {}}, Row{-65, {2, 4}}, Row{-105, {2, 2, 2}}}) {
    CAPTURE(r.d);
    auto k = field(r.d);
    const ClassGroup cl = class_group(k);
    std::vector<Integer> inv(r.inv.begin(), r.inv.end());
    CHECK(cl.invariants == inv);
    Integer prod = 1;
    for (const auto& x : cl.invariants) prod *= x;
    CHECK(prod == cl.order);
    for (std::size_t i = 0; i < cl.generators.size(); ++i) {
      CHECK_FALSE(principal(k, cl.generators[i]));
      IdealCombination pw = cl.generators[i];
      for (auto& [q, e] : pw) e *= cl.invariants[i];
      CHECK(principal(k, pw));
    }
  }
}

TEST_CASE("S-units of Q(sqrt 2) and Q(i)") {
  auto k = field(2);
  FieldSUnits su(k, {});
  REQUIRE(su.free_rank() == 1);
  CHECK(su.free_generators()[0] == k->element(1, 1));
  CHECK(su.torsion_order() == 2);
  // (1+√2)^3 · (−1)
  const FieldElem x = -(k->element(1, 1).pow(3));
  CHECK(su.dlog(x) == std::vector<Integer>{3, 1});

  auto gi = field(-1);
  FieldSUnits s2(gi, {2, 5});
  CHECK(s2.places().size() == 3);
  CHECK(s2.free_rank() == 3);
  CHECK(s2.torsion_order() == 4);
  CHECK_THROWS_AS(s2.dlog(gi->element(3)), InvalidInput);
  CHECK_THROWS_AS(s2.dlog(gi->element(1, 1) / gi->element(3)), InvalidInput);
}

TEST_CASE("dlog and evaluate are inverse on random S-units") {
  Rng rng(RngSeed{7});
  for (long d : {-5L, -1L, -3L, 2L, 5L, 6L, -23L, 10L, 13L, 79L, -47L}) {
    CAPTURE(d);
    auto k = field(d);
    FieldSUnits su(k, {2, 3, 5, 7});
    CHECK(su.valuation_basis().size() == su.places().size());
    const std::size_t n = su.free_rank() + 1;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Integer> e(n);
      for (std::size_t i = 0; i + 1 < n; ++i) e[i] = rng.uniform(-3, 3);
      e.back() = rng.uniform(0, su.torsion_order() - 1);
      const FieldElem x = su.evaluate(e);
      CHECK(su.dlog(x) == e);
    }
    // Every generator is an S-unit: its norm only involves primes of S.
    for (const auto& g : su.free_generators())
      for (const auto& p : prime_support(g.norm())) CHECK((p == 2 || p == 3 || p == 5 || p == 7));
  }
}

TEST_CASE("principal_generator recovers generators of principal ideals") {
  Rng rng(RngSeed{8});
  for (long d : {-47L, -5L, -1L, -3L, 2L, 10L, 79L, 94L, 223L, 1009L}) {
    CAPTURE(d);
    auto k = field(d);
    for (int trial = 0; trial < 8; ++trial) {
      const FieldElem beta = k->from_omega(rng.uniform(-30, 30), rng.uniform(1, 30));
      IdealCombination ideal;
      for (const auto& p : k->support_primes(beta))
        for (const auto& q : k->primes_above(p))
          if (long v = k->valuation(beta, q); v != 0) ideal.emplace_back(q, v);
      const auto g = principal_generator(*k, ideal);
      REQUIRE(g);
      const FieldElem u = *g / beta;
      Integer m;
      k->omega_coords(u, m);
      CHECK(m == 1);
      CHECK(abs(u.norm()) == 1);
    }
  }
  auto k = field(-5);
  CHECK_FALSE(principal_generator(*k, {{k->primes_above(Integer(2))[0], Integer(1)}}));
  CHECK(principal_generator(*k, {{k->primes_above(Integer(2))[0], Integer(2)}}));
}
