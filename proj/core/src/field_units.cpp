// Relation search in quadratic fields: sieve small elements of random ideals for norms that are
// smooth over the factor base, and accumulate their valuation vectors in an echelon lattice with
// the generating elements carried along. The lattice is complete once its rank equals the number
// of places and its determinant equals the class number.

#include "amitsur/field_units.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "amitsur/errors.hpp"
#include "amitsur/integer_matrix.hpp"
#include "amitsur/matrix.hpp"
#include "amitsur/number_theory.hpp"
#include "amitsur/random.hpp"

namespace amitsur {

namespace {

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Multiply by a power of ε so that x and its conjugate have comparable size.
FieldElem balance(const QuadraticField& k, const FieldElem& x) {
  if (!k.is_real() || x.is_rational()) return x;
  const FieldElem& eps = k.fundamental_unit();
  const double r = eps.log_abs();
  const double l1 = x.log_abs(), l2 = x.conj().log_abs();
  const long shift = std::lround((l1 - l2) / (2 * r));
  return shift == 0 ? x : x * eps.pow(-shift);
}

// ℤa + ℤ(b + cω) in Hermite form.
struct IdealLattice {
  Integer a, b, c;
};

IdealLattice lattice_from(std::vector<std::pair<Integer, Integer>> gens) {
  // Echelonise on the ω-coordinate first.
  std::pair<Integer, Integer> top{0, 0};
  Integer a = 0;
  for (auto& [x, y] : gens) {
    if (y == 0) {
      mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
      continue;
    }
    if (top.second == 0) {
      top = {x, y};
      continue;
    }
    const auto e = extended_gcd(top.second, y);
    const Integer u = y / e.gcd, v = top.second / e.gcd;
    const Integer rest_x = u * top.first - v * x;  // ω-coordinate cancels
    top = {e.s * top.first + e.t * x, e.gcd};
    mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), rest_x.get_mpz_t());
  }
  if (top.second < 0) top = {-top.first, -top.second};
  return {abs(a), mod(top.first, abs(a)), top.second};
}

IdealLattice prime_lattice(const QuadraticField& k, const PrimeIdeal& q) {
  if (q.kind == PlaceKind::Inert) return {q.p, 0, q.p};
  return {q.p, mod(-k.residue_root(q), q.p), 1};
}

IdealLattice multiply(const QuadraticField& k, const IdealLattice& i, const IdealLattice& j) {
  const std::pair<Integer, Integer> gi[2] = {{i.a, 0}, {i.b, i.c}}, gj[2] = {{j.a, 0}, {j.b, j.c}};
  std::vector<std::pair<Integer, Integer>> gens;
  for (const auto& [x1, y1] : gi)
    for (const auto& [x2, y2] : gj)
      gens.emplace_back(x1 * x2 - k.omega_norm() * y1 * y2, x1 * y2 + x2 * y1 + k.omega_trace() * y1 * y2);
  return lattice_from(std::move(gens));
}

// Echelon form of the relation vectors, rows indexed by pivot column.
class RelationLattice {
 public:
  RelationLattice(const QuadraticField& k, std::vector<PrimeIdeal> columns)
      : k_(k), cols_(std::move(columns)), rows_(cols_.size()) {
    for (std::size_t c = 0; c < cols_.size(); ++c) by_prime_[cols_[c].p].push_back(c);
  }

  const std::vector<PrimeIdeal>& columns() const { return cols_; }
  std::size_t rank() const { return rank_; }
  bool complete(const Integer& h) const {
    if (rank_ != cols_.size()) return false;
    Integer det = 1;
    for (std::size_t c = 0; c < cols_.size(); ++c) det *= (*rows_[c])[c];
    return det == h;
  }

  // Valuation vector of an integral element whose norm is smooth over the columns' primes.
  std::optional<std::vector<Integer>> smooth_vector(const FieldElem& x) const {
    Integer n = abs(x.norm().get_num());
    if (n == 0) return std::nullopt;
    std::vector<Integer> v(cols_.size(), Integer(0));
    for (const auto& [p, cs] : by_prime_) {
      if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) continue;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
      for (std::size_t c : cs) v[c] = k_.valuation(x, cols_[c]);
    }
    if (n != 1) return std::nullopt;
    return v;
  }

  void add(std::vector<Integer> v) {
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (v[c] == 0) continue;
      if (!rows_[c]) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        rows_[c] = std::move(v);
        ++rank_;
        return;
      }
      std::vector<Integer>& piv = *rows_[c];
      if (mpz_divisible_p(v[c].get_mpz_t(), piv[c].get_mpz_t())) {
        const Integer q = v[c] / piv[c];
        for (std::size_t j = c; j < cols_.size(); ++j) v[j] -= q * piv[j];
        continue;
      }
      const auto g = extended_gcd(piv[c], v[c]);
      const Integer u = v[c] / g.gcd, w = piv[c] / g.gcd;
      for (std::size_t j = c; j < cols_.size(); ++j) {
        Integer top = g.s * piv[j] + g.t * v[j];
        v[j] = u * piv[j] - w * v[j];
        piv[j] = std::move(top);
      }
      reduce_row(c);
    }
  }

  // Reduce entries right of each pivot into [0, pivot).
  void hermite_reduce() {
    for (std::size_t i = cols_.size(); i-- > 0;)
      if (rows_[i]) reduce_row(i);
  }

  const std::vector<Integer>& row(std::size_t c) const { return *rows_[c]; }

  IntegerMatrix matrix() const {
    IntegerMatrix m(cols_.size(), cols_.size());
    for (std::size_t i = 0; i < cols_.size(); ++i)
      for (std::size_t j = 0; j < cols_.size(); ++j) m(i, j) = (*rows_[i])[j];
    return m;
  }

 private:
  void reduce_row(std::size_t i) {
    std::vector<Integer>& r = *rows_[i];
    for (std::size_t j = i + 1; j < cols_.size(); ++j) {
      if (!rows_[j] || r[j] == 0) continue;
      const std::vector<Integer>& pj = *rows_[j];
      const Integer q = floor_div(r[j], pj[j]);
      if (q == 0) continue;
      for (std::size_t c = j; c < cols_.size(); ++c) r[c] -= q * pj[c];
    }
  }

  const QuadraticField& k_;
  std::vector<PrimeIdeal> cols_;
  std::map<Integer, std::vector<std::size_t>> by_prime_;
  std::vector<std::optional<std::vector<Integer>>> rows_;
  std::size_t rank_ = 0;
};

// Lagrange reduction for T2(x + yω) = 2x² + 2txy + cy², with c = t² − 2n (real) or 2n (imaginary).
std::pair<std::pair<Integer, Integer>, std::pair<Integer, Integer>> reduce_basis(const QuadraticField& k,
                                                                                const IdealLattice& ideal) {
  const Integer& t = k.omega_trace();
  const Integer c = k.is_real() ? Integer(t * t - 2 * k.omega_norm()) : Integer(2 * k.omega_norm());
  auto form = [&](const std::pair<Integer, Integer>& u, const std::pair<Integer, Integer>& w) -> Integer {
    return 2 * u.first * w.first + t * (u.first * w.second + u.second * w.first) + c * u.second * w.second;
  };
  std::pair<Integer, Integer> e1{ideal.a, 0}, e2{ideal.b, ideal.c};
  for (;;) {
    if (form(e1, e1) > form(e2, e2)) std::swap(e1, e2);
    const Integer q1 = form(e1, e1);
    const Integer mu = floor_div(2 * form(e1, e2) + q1, 2 * q1);
    if (mu == 0) break;
    e2 = {e2.first - mu * e1.first, e2.second - mu * e1.second};
  }
  return {e1, e2};
}

// Generator of a primitive ideal ℤa + ℤ(b + ω) of a real field: run the continued fraction of
// (b + ω)/a until the lattice ℤ + ℤθ_k equals O, so that the ideal is (a/(θ_1⋯θ_k)).
std::optional<FieldElem> real_generator(const QuadraticField& k, const Integer& a, const Integer& b) {
  const Integer& delta = k.disc();
  const Integer root = isqrt(delta);
  const Integer f = delta == k.D() ? 1 : 2;  // √Δ = f·√D
  Integer p = 2 * b + k.omega_trace(), q = 2 * a;
  FieldElem lambda = k.element(1);
  std::set<std::pair<Integer, Integer>> seen;
  while (abs(q) != 2) {
    if (!seen.emplace(p, q).second) return std::nullopt;
    const Integer digit = q > 0 ? floor_div(p + root, q) : floor_div(p + root + 1, q);
    p = digit * q - p;
    q = (delta - p * p) / q;
    lambda = lambda * k.element(Rational(p) / q, Rational(f) / q);
  }
  return k.element(a) / lambda;
}

}  // namespace

std::optional<FieldElem> principal_generator(const QuadraticField& k, const IdealCombination& ideal) {
  IdealLattice lat{1, 0, 1};
  for (const auto& [q, e] : ideal) {
    if (e < 0) throw InvalidInput("principal_generator expects an integral ideal");
    IdealLattice qp = prime_lattice(k, q);
    for (Integer i = 0; i < e; ++i) lat = multiply(k, lat, qp);
  }
  // Split off the rational content c.
  const Integer c = lat.c, a = lat.a / c, b = lat.b / c;
  if (a == 1) return k.element(c);
  if (k.is_real()) {
    auto g = real_generator(k, a, b);
    if (!g) return std::nullopt;
    return balance(k, *g * k.element(c));
  }
  const auto [e1, e2] = reduce_basis(k, {a, b, 1});
  const FieldElem beta = k.from_omega(e1.first, e1.second);
  if (abs(beta.norm()) != a) return std::nullopt;
  return beta * k.element(c);
}

namespace {

std::vector<Integer> factor_base_primes(const QuadraticField& k, const FactorBaseOptions& opts) {
  double bound = k.minkowski_bound();
  if (opts.bach) bound = std::min(bound, k.bach_bound());
  std::vector<Integer> out;
  for (Integer p = 2; p.get_d() <= bound; p = next_prime(p)) out.push_back(p);
  return out;
}

// Sieve until the lattice on the given columns is complete.
void fill(RelationLattice& lat, const QuadraticField& k, const FactorBaseOptions& opts) {
  const Integer& h = k.class_number();
  if (lat.complete(h)) return;
  const auto& cols = lat.columns();
  Rng rng(RngSeed{0x51ee7});

  auto sieve = [&](const IdealLattice& ideal, long radius) {
    const auto [e1, e2] = reduce_basis(k, ideal);
    for (long j = 0; j <= radius; ++j)
      for (long i = -radius; i <= radius; ++i) {
        if (j == 0 && i <= 0) continue;
        const FieldElem beta = k.from_omega(i * e1.first + j * e2.first, i * e1.second + j * e2.second);
        if (auto v = lat.smooth_vector(beta)) {
          lat.add(std::move(*v));
          if (lat.complete(h)) return true;
        }
      }
    return false;
  };

  std::size_t candidates = 0;
  const long radius = 4;
  const std::size_t per_ideal = static_cast<std::size_t>((2 * radius + 1) * (radius + 1));
  if (sieve({1, 0, 1}, 2 * radius)) return;
  for (const auto& q : cols)
    if (sieve(prime_lattice(k, q), radius)) return;
  while (candidates < opts.max_candidates) {
    IdealLattice ideal{1, 0, 1};
    const long factors = rng.uniform(1, 3);
    for (long f = 0; f < factors; ++f) {
      const auto& q = cols[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cols.size()) - 1))];
      ideal = multiply(k, ideal, prime_lattice(k, q));
    }
    if (sieve(ideal, radius)) return;
    candidates += per_ideal;
  }
  throw ComputationLimit("relation search did not complete the lattice");
}

}  // namespace

std::vector<Integer> ClassGroup::generating_primes() const {
  std::set<Integer> out;
  for (const auto& q : generating_places) out.insert(q.p);
  return {out.begin(), out.end()};
}

ClassGroup class_group(const QuadraticFieldPtr& kp, const FactorBaseOptions& opts) {
  const QuadraticField& k = *kp;
  std::vector<PrimeIdeal> cols;
  for (const auto& p : factor_base_primes(k, opts))
    for (const auto& q : k.primes_above(p)) cols.push_back(q);

  ClassGroup out;
  out.order = k.class_number();
  if (out.order == 1) return out;
  RelationLattice lat(k, cols);
  fill(lat, k, opts);

  const SmithForm snf = smith_normal_form(lat.matrix());
  const auto inv = snf.invariants();
  // New coordinates x ↦ x·V; the class of place j is row j of V reduced by the invariants.
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < inv.size(); ++i)
    if (inv[i] != 1) active.push_back(i);
  IntegerMatrix vinv(cols.size(), cols.size());
  {
    // V is unimodular: invert over ℚ and read back integers.
    RationalMatrix vq(cols.size(), cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) vq(i, j) = snf.v(i, j);
    const RationalMatrix w = inverse(vq);
    for (std::size_t i = 0; i < cols.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) vinv(i, j) = w(i, j).get_num();
  }
  for (std::size_t i : active) {
    out.invariants.push_back(inv[i]);
    IdealCombination g;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (vinv(i, j) != 0) g.emplace_back(cols[j], vinv(i, j));
    out.generators.push_back(std::move(g));
  }

  // Greedy choice of generating places, smallest norm first.
  std::vector<std::size_t> order(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return k.norm(cols[x]) < k.norm(cols[y]); });
  std::vector<std::vector<Integer>> chosen;
  for (std::size_t j : order) {
    std::vector<Integer> cls;
    for (std::size_t a = 0; a < active.size(); ++a) cls.push_back(mod(snf.v(j, active[a]), inv[active[a]]));
    chosen.push_back(cls);
    IntegerMatrix m(chosen.size() + active.size(), active.size());
    for (std::size_t r = 0; r < chosen.size(); ++r)
      for (std::size_t a = 0; a < active.size(); ++a) m(r, a) = chosen[r][a];
    for (std::size_t a = 0; a < active.size(); ++a) m(chosen.size() + a, a) = inv[active[a]];
    Integer index = 1;
    for (const auto& x : smith_normal_form(m).invariants()) index *= x;
    bool useful = true;
    if (chosen.size() > 1) {
      // Skip places whose class adds nothing.
      IntegerMatrix prev(chosen.size() - 1 + active.size(), active.size());
      for (std::size_t r = 0; r + 1 < chosen.size(); ++r)
        for (std::size_t a = 0; a < active.size(); ++a) prev(r, a) = chosen[r][a];
      for (std::size_t a = 0; a < active.size(); ++a) prev(chosen.size() - 1 + a, a) = inv[active[a]];
      Integer prev_index = 1;
      for (const auto& x : smith_normal_form(prev).invariants()) prev_index *= x;
      useful = index < prev_index;
    } else {
      useful = index < out.order;
    }
    if (!useful) {
      chosen.pop_back();
      continue;
    }
    out.generating_places.push_back(cols[j]);
    if (index == 1) break;
  }
  return out;
}

FieldSUnits::FieldSUnits(QuadraticFieldPtr k, std::vector<Integer> s_primes, const FactorBaseOptions& opts)
    : k_(std::move(k)), s_primes_(std::move(s_primes)) {
  std::sort(s_primes_.begin(), s_primes_.end());
  s_primes_.erase(std::unique(s_primes_.begin(), s_primes_.end()), s_primes_.end());
  for (const auto& p : s_primes_)
    if (!is_prime(p)) throw InvalidInput("S must consist of primes");

  const std::set<Integer> in_s(s_primes_.begin(), s_primes_.end());
  std::vector<PrimeIdeal> cols;
  for (const auto& p : factor_base_primes(*k_, opts))
    if (!in_s.count(p))
      for (const auto& q : k_->primes_above(p)) cols.push_back(q);
  const std::size_t extra = cols.size();
  for (const auto& p : s_primes_)
    for (const auto& q : k_->primes_above(p)) {
      cols.push_back(q);
      places_.push_back(q);
    }

  RelationLattice lat(*k_, cols);
  fill(lat, *k_, opts);
  lat.hermite_reduce();

  if (k_->is_real()) free_.push_back(k_->fundamental_unit());
  for (std::size_t c = extra; c < cols.size(); ++c) {
    const auto& row = lat.row(c);
    basis_.emplace_back(row.begin() + static_cast<long>(extra), row.end());
    IdealCombination ideal;
    for (std::size_t j = c; j < cols.size(); ++j)
      if (row[j] != 0) ideal.emplace_back(cols[j], row[j]);
    auto gamma = principal_generator(*k_, ideal);
    if (!gamma) throw InconsistentPresentation("relation lattice row is not principal");
    free_.push_back(std::move(*gamma));
  }
}

std::vector<Integer> FieldSUnits::dlog(const FieldElem& x) const {
  if (x.is_zero()) throw InvalidInput("zero is not an S-unit");
  const std::size_t s = places_.size();
  std::vector<Integer> v(s);
  for (std::size_t i = 0; i < s; ++i) v[i] = k_->valuation(x, places_[i]);
  std::vector<Integer> e(s);
  for (std::size_t i = 0; i < s; ++i) {
    Integer r = v[i];
    for (std::size_t j = 0; j < i; ++j) r -= e[j] * basis_[j][i];
    if (!mpz_divisible_p(r.get_mpz_t(), basis_[i][i].get_mpz_t()))
      throw InvalidInput("valuations outside the S-unit lattice");
    e[i] = r / basis_[i][i];
  }
  const std::size_t off = k_->is_real() ? 1 : 0;
  FieldElem mu = x;
  for (std::size_t i = 0; i < s; ++i)
    if (e[i] != 0) mu = mu * free_[off + i].pow(-e[i].get_si());

  Integer m;
  k_->omega_coords(mu, m);
  if (m != 1 || abs(mu.norm()) != 1) throw InvalidInput("element is not an S-unit");

  std::vector<Integer> out;
  if (k_->is_real()) {
    const long ke = std::lround(mu.log_abs() / free_[0].log_abs());
    mu = mu * free_[0].pow(-ke);
    out.emplace_back(ke);
  }
  out.insert(out.end(), e.begin(), e.end());
  const FieldElem zeta = torsion_generator();
  FieldElem z = FieldElem::rational(1, k_->D());
  for (unsigned t = 0; t < torsion_order(); ++t, z = z * zeta)
    if (z == mu) {
      out.emplace_back(t);
      return out;
    }
  throw InvalidInput("unit part is not torsion after removing ε");
}

FieldElem FieldSUnits::evaluate(std::span<const Integer> exponents) const {
  if (exponents.size() != free_.size() + 1) throw DimensionMismatch("exponent vector length");
  FieldElem r = torsion_generator().pow(mod(exponents.back(), Integer(torsion_order())).get_si());
  for (std::size_t i = 0; i < free_.size(); ++i)
    if (exponents[i] != 0) r = r * free_[i].pow(exponents[i].get_si());
  return r;
}

}  // namespace amitsur
