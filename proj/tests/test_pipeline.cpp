#include <doctest.h>

#include "amitsur/errors.hpp"
#include "amitsur/pipeline.hpp"

using namespace amitsur;

TEST_CASE("generate_instance") {
  const Instance one = generate_instance(1, RngSeed{0});
  CHECK(one.algebra.dim() == 1);
  const Instance two = generate_instance(2, RngSeed{0});
  CHECK(two.algebra.dim() == 4);
  CHECK(generate_instance(2, RngSeed{0}).algebra.table() == two.algebra.table());

  for (std::size_t d : {2, 3}) {
    const Instance w = generate_instance(d, RngSeed{5}, Witness::SplitU);
    REQUIRE(w.split_u);
    const Polynomial p = min_poly(*w.split_u, w.algebra);
    CHECK(p.degree() == static_cast<int>(d));
    for (const auto& f : poly_factor(p)) CHECK(f.factor.degree() == 1);
  }
}

TEST_CASE("M2 from matrix units gives a verified certificate") {
  const auto cert = explicit_isomorphism(StructureConstantAlgebra::matrix_algebra(2), RngSeed{0});
  const auto report = verify(cert);
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("conjugated instances") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    CAPTURE(seed);
    const Instance inst = generate_instance(2, RngSeed{seed});
    CHECK(verify(explicit_isomorphism(inst.algebra, RngSeed{seed})).passed());
    const Instance w = generate_instance(3, RngSeed{seed}, Witness::SplitU);
    PipelineOptions opts;
    opts.witness_u = w.split_u;
    CHECK(verify(explicit_isomorphism(w.algebra, RngSeed{seed}, opts)).passed());
  }
}

TEST_CASE("the certificate is deterministic per seed") {
  const Instance inst = generate_instance(2, RngSeed{9});
  CHECK(explicit_isomorphism(inst.algebra, RngSeed{4}).map == explicit_isomorphism(inst.algebra, RngSeed{4}).map);
}

TEST_CASE("Hamilton quaternions have no explicit isomorphism") {
  CHECK_THROWS_AS(explicit_isomorphism(StructureConstantAlgebra::quaternion(-1, -1), RngSeed{0}), NotACoboundary);
}

TEST_CASE("verify catches mutations") {
  const auto cert = explicit_isomorphism(StructureConstantAlgebra::matrix_algebra(2), RngSeed{1});
  auto bad = cert;
  bad.map(1, 2) += 1;
  CHECK_FALSE(verify(bad).passed());

  auto badc = cert;
  const auto& c = cert.presentation.c.value();
  auto coeffs = c.coeffs();
  coeffs[0] += 2;  // c·(non-coboundary) in general
  badc.presentation.c = Cocycle2(TensorElement(c.algebra(), 2, coeffs));
  const auto report = verify(badc);
  CHECK_FALSE(report.passed());
}
