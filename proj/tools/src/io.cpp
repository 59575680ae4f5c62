#include "io.hpp"

#include "amitsur/errors.hpp"

namespace amitsur::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_from(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InvalidInput("expected a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Rational& x) { return x.get_str(); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) throw InvalidInput("rationals are encoded as strings");
  return parse_rational(j.get<std::string>());
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::vector<Rational> rationals_from(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from(x));
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

RationalMatrix matrix_from(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rows");
  std::vector<Rational> flat;
  std::size_t cols = 0;
  for (const auto& row : j) {
    auto r = rationals_from(row);
    if (flat.empty()) cols = r.size();
    if (r.size() != cols) throw InvalidInput("ragged matrix");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return RationalMatrix(j.size(), cols, std::move(flat));
}

Json to_json(const Polynomial& p) { return to_json(p.coefficients()); }
Polynomial polynomial_from(const Json& j) { return Polynomial(rationals_from(j)); }

Json to_json(const TensorElement& a) {
  return Json{{"P", to_json(a.field().poly())}, {"level", a.level()}, {"coeffs", to_json(a.coeffs())}};
}

TensorElement tensor_from(const Json& j, const EtaleAlgebraPtr& f) {
  const Polynomial p = polynomial_from(field(j, "P"));
  EtaleAlgebraPtr alg = f && f->poly() == p ? f : EtaleAlgebra::make(p);
  return TensorElement(alg, static_cast<unsigned>(size_from(field(j, "level"))), rationals_from(field(j, "coeffs")));
}

Json to_json(const StructureConstantAlgebra& a, const std::optional<std::vector<Rational>>& witness_u) {
  const std::size_t m = a.dim();
  Json table = Json::array();
  for (std::size_t i = 0; i < m; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < m; ++k) cell.push_back(to_json(a(i, j, k)));
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  Json out{{"dim", m}, {"basis", a.basis()}, {"table", std::move(table)}};
  if (witness_u) out["witness_u"] = to_json(*witness_u);
  return out;
}

StructureConstantAlgebra algebra_from(const Json& j) {
  const std::size_t m = size_from(field(j, "dim"));
  const Json& table = field(j, "table");
  if (!table.is_array() || table.size() != m) throw InvalidInput("table must be dim × dim × dim");
  std::vector<Rational> flat;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != m) throw InvalidInput("table must be dim × dim × dim");
    for (const auto& cell : row) {
      auto c = rationals_from(cell);
      if (c.size() != m) throw InvalidInput("table must be dim × dim × dim");
      flat.insert(flat.end(), c.begin(), c.end());
    }
  }
  std::vector<std::string> basis;
  if (j.contains("basis")) basis = j.at("basis").get<std::vector<std::string>>();
  return StructureConstantAlgebra(m, std::move(flat), std::move(basis));
}

std::optional<std::vector<Rational>> witness_from(const Json& j) {
  if (!j.is_object() || !j.contains("witness_u")) return std::nullopt;
  return rationals_from(j.at("witness_u"));
}

Json to_json(const AmitsurPresentation& p) {
  return Json{{"u", to_json(p.u)}, {"P", to_json(p.p())}, {"v", to_json(p.v)}, {"c", to_json(p.c.value())},
              {"e", to_json(p.e)}};
}

AmitsurPresentation presentation_from(const Json& j) {
  const EtaleAlgebraPtr f = EtaleAlgebra::make(polynomial_from(field(j, "P")));
  TensorElement c = tensor_from(field(j, "c"), f);
  if (c.level() != 2) throw InvalidInput("cocycle must live at level 2");
  return AmitsurPresentation{rationals_from(field(j, "u")), f, Cocycle2(std::move(c)), matrix_from(field(j, "e")),
                             rationals_from(field(j, "v"))};
}

Json to_json(const Divisor& d) {
  Json terms = Json::array();
  for (const auto& [q, c] : d.terms()) {
    Json t{{"component", q.component}, {"prime", q.p.get_str()}};
    if (q.kind != PlaceKind::Rational) t["kind"] = std::string(to_string(q.kind));
    t["coeff"] = c.get_str();
    terms.push_back(std::move(t));
  }
  return Json{{"level", d.level()}, {"terms", std::move(terms)}};
}

Json to_json(const IsomorphismCertificate& c) {
  Json primes = Json::array();
  for (const auto& p : c.s_primes) primes.push_back(p.get_str());
  return Json{{"algebra", to_json(c.algebra)}, {"degree", c.degree},       {"map", to_json(c.map)},
              {"presentation", to_json(c.presentation)}, {"trivialisation", to_json(c.trivialisation)},
              {"s_primes", std::move(primes)}, {"divisor", to_json(divisor_of(c.trivialisation))}};
}

IsomorphismCertificate certificate_from(const Json& j) {
  AmitsurPresentation pres = presentation_from(field(j, "presentation"));
  TensorElement a = tensor_from(field(j, "trivialisation"), pres.f);
  std::vector<Integer> primes;
  for (const auto& p : field(j, "s_primes")) primes.emplace_back(p.get<std::string>());
  return IsomorphismCertificate{algebra_from(field(j, "algebra")), size_from(field(j, "degree")),
                                matrix_from(field(j, "map")), std::move(pres), std::move(a), std::move(primes)};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json x{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    checks.push_back(std::move(x));
  }
  return Json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace amitsur::io
