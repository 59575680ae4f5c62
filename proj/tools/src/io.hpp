#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "amitsur/arithmetic.hpp"
#include "amitsur/pipeline.hpp"

namespace amitsur::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Rational rational_from(const Json& j);
Json to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from(const Json& j);
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from(const Json& j);

Json to_json(const TensorElement& a);
TensorElement tensor_from(const Json& j, const EtaleAlgebraPtr& f = nullptr);

Json to_json(const StructureConstantAlgebra& a, const std::optional<std::vector<Rational>>& witness_u = std::nullopt);
StructureConstantAlgebra algebra_from(const Json& j);
std::optional<std::vector<Rational>> witness_from(const Json& j);

Json to_json(const AmitsurPresentation& p);
AmitsurPresentation presentation_from(const Json& j);

Json to_json(const Divisor& d);

Json to_json(const IsomorphismCertificate& c);
IsomorphismCertificate certificate_from(const Json& j);

Json to_json(const VerificationReport& r);

}  // namespace amitsur::io
