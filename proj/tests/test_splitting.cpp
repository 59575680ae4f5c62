#include <doctest.h>

#include "amitsur/errors.hpp"
#include "amitsur/splitting.hpp"
#include "support.hpp"

using namespace amitsur;
using test::algebra;

namespace {

const std::vector<std::vector<long>> kPolys = {
    {0, -1, 1},        // X² − X
    {-2, 0, 1},        // X² − 2
    {1, 0, 1},         // X² + 1
    {-1, 1, -1, 1},    // (X − 1)(X² + 1)
    {0, -1, 0, 1},     // X³ − X
    {-1, -1, 1},       // X² − X − 1
    {16, 0, -10, 0, 1} // (X² − 2)(X² − 8)
};

}  // namespace

TEST_CASE("component lists for the documented examples") {
  auto s = Splitting::make(algebra({0, -1, 1}));
  REQUIRE(s->components(0).size() == 2);
  CHECK_FALSE(s->components(0)[0].quadratic);
  CHECK_FALSE(s->components(0)[1].quadratic);
  CHECK(s->field() == nullptr);

  auto r2 = Splitting::make(algebra({-2, 0, 1}));
  REQUIRE(r2->field());
  CHECK(r2->field()->D() == 2);
  CHECK(r2->components(0).size() == 1);
  CHECK(r2->components(1).size() == 2);
  CHECK(r2->components(2).size() == 4);
  for (unsigned n = 1; n <= 2; ++n)
    for (const auto& c : r2->components(n)) CHECK(c.quadratic);
}

TEST_CASE("unsupported splitting fields are rejected") {
  CHECK_THROWS_AS(Splitting::make(algebra({-2, 0, 0, 1})), UnsupportedDegree);
  CHECK_THROWS_AS(Splitting::make(algebra({6, 0, -5, 0, 1})), UnsupportedDegree);  // (X²−2)(X²−3)
  CHECK_NOTHROW(Splitting::make(algebra({16, 0, -10, 0, 1})));
}

TEST_CASE("component dimensions add up to the tensor dimension") {
  for (const auto& c : kPolys) {
    auto s = Splitting::make(algebra(c));
    std::size_t size = 1;
    for (unsigned n = 0; n <= 3; ++n) {
      size *= s->degree();
      std::size_t total = 0;
      for (const auto& comp : s->components(n)) total += comp.dimension();
      CHECK(total == size);
    }
  }
}

TEST_CASE("projection is a ring isomorphism onto the product of components") {
  Rng rng(RngSeed{11});
  for (const auto& c : kPolys) {
    auto f = algebra(c);
    auto s = Splitting::make(f);
    for (unsigned n = 0; n <= 2; ++n)
      for (int trial = 0; trial < 4; ++trial) {
        const auto a = test::random_element(f, n, rng), b = test::random_element(f, n, rng);
        const auto pa = s->project(a), pb = s->project(b), pab = s->project(a * b);
        for (std::size_t k = 0; k < pa.size(); ++k) CHECK(pab[k] == pa[k] * pb[k]);
        CHECK(s->lift(n, pa) == a);
      }
    // Basis-by-basis multiplication table.
    for (std::size_t i = 0; i < f->degree() * f->degree(); ++i)
      for (std::size_t j = 0; j < f->degree() * f->degree(); ++j) {
        std::vector<Rational> ei(f->degree() * f->degree()), ej(ei.size());
        ei[i] = 1;
        ej[j] = 1;
        const TensorElement x(f, 1, ei), y(f, 1, ej);
        const auto px = s->project(x), py = s->project(y), pxy = s->project(x * y);
        for (std::size_t k = 0; k < px.size(); ++k) CHECK(pxy[k] == px[k] * py[k]);
      }
  }
}

TEST_CASE("face links describe the projections of epsilon") {
  Rng rng(RngSeed{12});
  for (const auto& c : kPolys) {
    auto f = algebra(c);
    auto s = Splitting::make(f);
    for (unsigned n = 0; n <= 2; ++n)
      for (unsigned i = 0; i <= n + 1; ++i) {
        const auto a = test::random_element(f, n, rng);
        const auto pa = s->project(a), pe = s->project(epsilon(i, a));
        const ComponentMap m = s->face(n, i);
        REQUIRE(m.links.size() == pe.size());
        for (std::size_t k = 0; k < pe.size(); ++k) CHECK(pe[k] == s->apply(m.links[k], pa));
      }
  }
}

TEST_CASE("split_components returns the projection rows") {
  auto f = algebra({-2, 0, 1});
  const auto comps = split_components(f, 1);
  REQUIRE(comps.size() == 2);
  for (const auto& sc : comps) {
    CHECK(sc.field);
    CHECK(sc.projection.rows() == 2);
    CHECK(sc.projection.cols() == 4);
  }
  CHECK(split_components(algebra({0, -1, 1}), 0)[0].field == nullptr);
}
