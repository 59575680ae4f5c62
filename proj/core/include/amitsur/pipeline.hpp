#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amitsur/algebra.hpp"
#include "amitsur/arithmetic.hpp"

namespace amitsur {

enum class Witness { None, SplitU };

struct Instance {
  StructureConstantAlgebra algebra;
  /// With Witness::SplitU: coordinates of a diagonal matrix with distinct eigenvalues.
  std::optional<std::vector<Rational>> split_u;
};

/// M_d(ℚ) in the basis B_k = Σ_j T_jk·E_j for a seeded invertible T with entries in {−3..3}.
Instance generate_instance(std::size_t d, RngSeed seed, Witness witness = Witness::None);

struct PipelineOptions {
  SearchOptions search;
  ArithmeticOptions arithmetic;
  std::optional<std::vector<Rational>> witness_u;
};

struct IsomorphismCertificate {
  StructureConstantAlgebra algebra;
  std::size_t degree = 0;
  /// Column k holds the d×d image of basis element k, flattened row-major.
  RationalMatrix map;
  AmitsurPresentation presentation;
  TensorElement trivialisation;
  std::vector<Integer> s_primes;

  RationalMatrix image(const std::vector<Rational>& x) const;
};

/// present(), trivialisation of the cocycle, then the twisted trivial-cocycle matrix model.
IsomorphismCertificate explicit_isomorphism(const StructureConstantAlgebra& a, RngSeed seed,
                                            const PipelineOptions& opts = {});

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Matrix model from an already computed presentation and trivialisation (nothing is re-checked).
IsomorphismCertificate assemble_certificate(const StructureConstantAlgebra& a, AmitsurPresentation pres,
                                            Trivialisation triv);

VerificationReport verify(const IsomorphismCertificate& cert);

}  // namespace amitsur
