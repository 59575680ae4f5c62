#include "amitsur/pipeline.hpp"

#include <algorithm>
#include <functional>

#include "amitsur/errors.hpp"

namespace amitsur {

namespace {

std::vector<Rational> unit_vector(std::size_t n, std::size_t k) {
  std::vector<Rational> v(n);
  v[k] = 1;
  return v;
}

}  // namespace

Instance generate_instance(std::size_t d, RngSeed seed, Witness witness) {
  if (d == 0) throw InvalidInput("degree must be positive");
  Rng rng(seed);
  const std::size_t n = d * d;
  RationalMatrix t(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = rng.uniform(-3, 3);
  } while (determinant(t) == 0);

  std::vector<RationalMatrix> basis;
  for (std::size_t k = 0; k < n; ++k) {
    RationalMatrix b(d, d);
    for (std::size_t j = 0; j < n; ++j) b(j / d, j % d) = t(j, k);
    basis.push_back(std::move(b));
  }
  Instance out{StructureConstantAlgebra::from_matrices(basis), std::nullopt};
  if (witness == Witness::SplitU) {
    std::vector<long> pool = {-3, -2, -1, 0, 1, 2, 3};
    std::vector<long> eig;
    while (eig.size() < d) {
      const long x = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
      if (std::find(eig.begin(), eig.end(), x) == eig.end()) eig.push_back(x);
      if (eig.size() == pool.size()) break;
    }
    // Beyond seven eigenvalues fall back to 4, 5, ...
    for (long x = 4; eig.size() < d; ++x) eig.push_back(x);
    std::vector<Rational> diag(n);
    for (std::size_t i = 0; i < d; ++i) diag[i * d + i] = eig[i];
    out.split_u = inverse(t).apply(diag);
  }
  return out;
}

RationalMatrix IsomorphismCertificate::image(const std::vector<Rational>& x) const {
  const auto flat = map.apply(x);
  return RationalMatrix(degree, degree, flat);
}

IsomorphismCertificate explicit_isomorphism(const StructureConstantAlgebra& a, RngSeed seed, const PipelineOptions& opts) {
  AmitsurPresentation pres = present(a, seed, opts.search, opts.witness_u);
  Trivialisation triv = trivialize_coboundary(pres.c, opts.arithmetic);
  return assemble_certificate(a, std::move(pres), std::move(triv));
}

IsomorphismCertificate assemble_certificate(const StructureConstantAlgebra& a, AmitsurPresentation pres,
                                            Trivialisation triv) {
  if (pres.e.rows() != a.dim()) throw DimensionMismatch("presentation does not belong to this algebra");
  // x ↦ e⁻¹(x)·a lands in A(F, 1), which the trivial model sends to M_d(ℚ).
  const std::size_t d = pres.f->degree(), n = d * d;
  const RationalMatrix e_inv = inverse(pres.e);
  RationalMatrix map(n, n);
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const TensorElement m = TensorElement(pres.f, 1, e_inv.apply(unit_vector(n, k))) * triv.a;
    const RationalMatrix img = trivial_matrix_iso(m);
    for (std::size_t r = 0; r < n; ++r) map(r, k) = img.entries()[r];
  }
  return IsomorphismCertificate{a, d, std::move(map), std::move(pres), std::move(triv.a), std::move(triv.s_primes)};
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify(const IsomorphismCertificate& cert) {
  VerificationReport report;
  auto run = [&](std::string name, const std::function<std::string()>& check) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& ex) {
      r.detail = ex.what();
    }
    report.checks.push_back(std::move(r));
  };
  const auto& a = cert.algebra;
  const auto& pres = cert.presentation;
  const std::size_t d = cert.degree, n = d * d;

  run("dimensions", [&]() -> std::string {
    if (a.dim() != n || cert.map.rows() != n || cert.map.cols() != n) return "dimension mismatch";
    if (pres.f->degree() != d || cert.trivialisation.level() != 1) return "presentation degree mismatch";
    return {};
  });
  if (!report.checks.back().passed) return report;

  run("witnesses", [&]() -> std::string {
    if (pres.u.size() != n || pres.v.size() != n) return "u or v has the wrong length";
    if (min_poly(pres.u, a) != pres.p()) return "P is not the minimal polynomial of u";
    return embedding_matrix(a, pres.u, pres.v) == pres.e ? "" : "e is not the embedding matrix of (u, v)";
  });
  run("cocycle", [&]() -> std::string { return pres.c.is_cocycle() ? "" : "delta(c) != 1"; });
  run("presentation", [&]() -> std::string {
    return presentation_holds(a, pres) ? "" : "e does not intertwine the cocycle product";
  });
  run("coboundary", [&]() -> std::string {
    return delta(cert.trivialisation) == pres.c.value() ? "" : "delta(a) != c";
  });
  run("s_unit_support", [&]() -> std::string {
    for (const auto& p : divisor_of(cert.trivialisation).primes())
      if (!std::binary_search(cert.s_primes.begin(), cert.s_primes.end(), p))
        return "divisor of a meets the prime " + p.get_str() + " outside S";
    return {};
  });
  run("homomorphism", [&]() -> std::string {
    std::vector<RationalMatrix> img;
    for (std::size_t k = 0; k < n; ++k) img.push_back(cert.image(unit_vector(n, k)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (cert.image(sc_mul(unit_vector(n, i), unit_vector(n, j), a)) != img[i] * img[j])
          return "map(b" + std::to_string(i) + "·b" + std::to_string(j) + ") differs";
    return {};
  });
  run("unit", [&]() -> std::string {
    return cert.image(a.unit()) == RationalMatrix::identity(d) ? "" : "unit does not map to the identity";
  });
  run("invertible", [&]() -> std::string { return rank(cert.map) == n ? "" : "map is singular"; });
  return report;
}

}  // namespace amitsur
