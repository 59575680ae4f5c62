#include "amitsur/arithmetic.hpp"

#include <algorithm>
#include <set>

#include "amitsur/errors.hpp"
#include "amitsur/number_theory.hpp"

namespace amitsur {

namespace {

FieldElem unit_value(const Splitting& s) { return FieldElem::rational(1, s.field() ? s.field()->D() : Integer(1)); }

void check_disc(const Splitting& s, const ArithmeticOptions& opts) {
  if (s.field() && opts.max_disc && abs(s.field()->disc()) > *opts.max_disc)
    throw DiscriminantTooLarge("component field discriminant " + s.field()->disc().get_str() + " exceeds the bound");
}

std::vector<Integer> normalise_primes(std::vector<Integer> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& p : primes)
    if (!is_prime(p)) throw InvalidInput("S must consist of primes, got " + p.get_str());
  return primes;
}

// Values of Δ(x) on the components of level n+1.
std::vector<FieldElem> delta_values(const Splitting& s, unsigned n, const std::vector<FieldElem>& x) {
  std::vector<FieldElem> out(s.components(n + 1).size(), unit_value(s));
  for (unsigned i = 0; i <= n + 1; ++i) {
    const ComponentMap f = s.face(n, i);
    for (std::size_t c = 0; c < out.size(); ++c) {
      const FieldElem v = s.apply(f.links[c], x);
      out[c] = i % 2 == 0 ? out[c] * v : out[c] / v;
    }
  }
  return out;
}

}  // namespace

std::strong_ordering Place::operator<=>(const Place& o) const {
  if (auto c = level <=> o.level; c != 0) return c;
  if (auto c = component <=> o.component; c != 0) return c;
  return prime() <=> o.prime();
}

Integer Divisor::operator[](const Place& q) const {
  auto it = terms_.find(q);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Divisor::add(const Place& q, const Integer& c) {
  if (q.level != level_) throw InvalidInput("place level does not match the divisor");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(q, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

std::vector<Integer> Divisor::primes() const {
  std::set<Integer> out;
  for (const auto& [q, c] : terms_) out.insert(q.p);
  return {out.begin(), out.end()};
}

Divisor& Divisor::operator+=(const Divisor& o) {
  if (o.level_ != level_) throw InvalidInput("divisor levels differ");
  for (const auto& [q, c] : o.terms_) add(q, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  if (o.level_ != level_) throw InvalidInput("divisor levels differ");
  for (const auto& [q, c] : o.terms_) add(q, -c);
  return *this;
}

Divisor& Divisor::operator*=(const Integer& c) {
  if (c == 0) terms_.clear();
  for (auto& [q, v] : terms_) v *= c;
  return *this;
}

Divisor divisor_of(const Splitting& s, const TensorElement& a) {
  const unsigned n = a.level();
  const auto& comps = s.components(n);
  const std::vector<FieldElem> values = s.project(a);
  Divisor out(n);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const FieldElem& v = values[c];
    if (v.is_zero()) {
      std::vector<FieldElem> e(values.size(), FieldElem::rational(0, v.D()));
      e[c] = unit_value(s);
      throw NonUnit("element vanishes on a component", s.lift(n, e).coeffs());
    }
    if (!comps[c].quadratic) {
      for (const auto& p : prime_support(v.a())) out.add({n, c, p, PlaceKind::Rational}, valuation(v.a(), p));
      continue;
    }
    const QuadraticField& k = *s.field();
    for (const auto& p : k.support_primes(v))
      for (const auto& q : k.primes_above(p)) out.add({n, c, p, q.kind}, k.valuation(v, q));
  }
  return out;
}

Divisor divisor_of(const TensorElement& a) { return divisor_of(*Splitting::make(a.algebra()), a); }

Divisor pushforward(const Splitting& s, const ComponentMap& f, const Divisor& d) {
  if (d.level() != f.source_level) throw InvalidInput("divisor level does not match the map");
  const auto& src = s.components(f.source_level);
  const auto& dst = s.components(f.target_level);
  std::vector<std::vector<std::size_t>> targets(src.size());
  for (std::size_t c = 0; c < f.links.size(); ++c) targets[f.links[c].source].push_back(c);

  Divisor out(f.target_level);
  for (const auto& [q, n] : d.terms()) {
    for (std::size_t c : targets[q.component]) {
      const unsigned lv = f.target_level;
      if (!dst[c].quadratic) {
        out.add({lv, c, q.p, PlaceKind::Rational}, n);
      } else if (!src[q.component].quadratic) {
        const QuadraticField& k = *s.field();
        const Integer e = k.ramification_index(q.p);
        for (const auto& qq : k.primes_above(q.p)) out.add({lv, c, q.p, qq.kind}, e * n);
      } else {
        const PrimeIdeal pr = f.links[c].conj ? s.field()->conjugate(q.prime()) : q.prime();
        out.add({lv, c, pr.p, pr.kind}, n);
      }
    }
  }
  return out;
}

Divisor delta_divisor(const Splitting& s, const Divisor& d) {
  const unsigned n = d.level();
  Divisor out(n + 1);
  for (unsigned i = 0; i <= n + 1; ++i) {
    const Divisor push = pushforward(s, s.face(n, i), d);
    if (i % 2 == 0) {
      out += push;
    } else {
      out -= push;
    }
  }
  return out;
}

Divisor divisor_trivialize(const Splitting& s, const Divisor& d) {
  if (d.level() != 1) throw InvalidInput("divisor_trivialize expects a level-1 divisor");
  const auto ram = ramified_places(s.algebra());
  for (const auto& p : d.primes())
    if (std::binary_search(ram.begin(), ram.end(), p))
      throw RamifiedSupport("divisor is supported above the ramified prime " + p.get_str());
  if (!delta_divisor(s, d).is_zero()) throw NotInKernel("the divisor is not closed under the differential");

  // Q₀ = P: the level-0 place whose ε₀-image contains Q.
  const ComponentMap f0 = s.face(0, 0);
  const auto& src = s.components(0);
  std::set<Place> bases;
  for (const auto& [q, n] : d.terms()) {
    const ComponentLink& link = f0.links[q.component];
    if (!src[link.source].quadratic) {
      bases.insert({0, link.source, q.p, PlaceKind::Rational});
    } else {
      const PrimeIdeal pr = link.conj ? s.field()->conjugate(q.prime()) : q.prime();
      bases.insert({0, link.source, pr.p, pr.kind});
    }
  }
  Divisor e(0);
  for (const auto& base : bases) {
    Divisor single(0);
    single.add(base, 1);
    std::optional<Integer> lowest;
    const Divisor above = pushforward(s, f0, single);
    for (const auto& [q, one] : above.terms()) {
      const Integer v = d[q];
      if (!lowest || v < *lowest) lowest = v;
    }
    e.add(base, *lowest);
  }
  if (delta_divisor(s, e) != d) throw NotInKernel("no level-0 divisor maps onto the input");
  return e;
}

std::vector<Integer> ramified_places(const EtaleAlgebraPtr& f) {
  const SplittingPtr s = Splitting::make(f);
  if (!s->field()) return {};
  std::vector<Integer> out;
  for (const auto& pp : factor_integer(abs(s->field()->disc()))) out.push_back(pp.prime);
  return out;
}

ClassGroup class_group(const Splitting& s, const ArithmeticOptions& opts) {
  if (!s.field()) return ClassGroup{Integer(1), {}, {}, {}};
  check_disc(s, opts);
  return class_group(s.field(), opts.factor_base);
}

SUnitGroup::SUnitGroup(SplittingPtr s, unsigned level, std::vector<Integer> s_primes,
                       std::shared_ptr<const FieldSUnits> field_units, const ArithmeticOptions& opts)
    : s_(std::move(s)), level_(level), s_primes_(normalise_primes(std::move(s_primes))), k_units_(std::move(field_units)) {
  const auto& comps = s_->components(level_);
  const bool any_quadratic = std::any_of(comps.begin(), comps.end(), [](const Component& c) { return c.quadratic; });
  if (any_quadratic) {
    check_disc(*s_, opts);
    if (!k_units_) {
      k_units_ = std::make_shared<const FieldSUnits>(s_->field(), s_primes_, opts.factor_base);
    } else if (k_units_->s_primes() != s_primes_) {
      throw InvalidInput("field S-units were computed for another prime set");
    }
  }

  std::size_t offset = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    slots_.push_back({c, offset});
    offset += comps[c].quadratic ? k_units_->free_rank() : s_primes_.size();
  }
  group_.free_rank = offset;
  for (const auto& comp : comps)
    if (!comp.quadratic) group_.torsion_invariants.emplace_back(2);
  for (const auto& comp : comps)
    if (comp.quadratic) group_.torsion_invariants.emplace_back(k_units_->torsion_order());

  std::vector<Integer> e(group_.size(), Integer(0));
  for (std::size_t j = 0; j < e.size(); ++j) {
    e[j] = 1;
    group_.generators.push_back(evaluate(e));
    e[j] = 0;
  }
}

std::vector<Integer> SUnitGroup::dlog(const std::vector<FieldElem>& values) const {
  const auto& comps = s_->components(level_);
  if (values.size() != comps.size()) throw DimensionMismatch("one value per component expected");
  std::vector<Integer> out(group_.size(), Integer(0));
  std::size_t rational_torsion = group_.free_rank;
  std::size_t field_torsion = group_.free_rank + static_cast<std::size_t>(std::count_if(
                                                     comps.begin(), comps.end(), [](const Component& c) { return !c.quadratic; }));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const FieldElem& v = values[c];
    if (v.is_zero()) throw InvalidInput("zero is not an S-unit");
    if (!comps[c].quadratic) {
      if (!v.is_rational()) throw InvalidInput("irrational value on a rational component");
      Rational x = v.a();
      for (std::size_t i = 0; i < s_primes_.size(); ++i) {
        const int k = valuation(x, s_primes_[i]);
        out[slots_[c].offset + i] = k;
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), s_primes_[i].get_mpz_t(), static_cast<unsigned long>(std::abs(k)));
        x = k >= 0 ? Rational(x / pk) : Rational(x * pk);
      }
      if (abs(x) != 1) throw InvalidInput("rational value is not an S-unit");
      out[rational_torsion++] = x < 0 ? 1 : 0;
      continue;
    }
    const auto ex = k_units_->dlog(v);
    std::copy(ex.begin(), ex.end() - 1, out.begin() + static_cast<long>(slots_[c].offset));
    out[field_torsion++] = ex.back();
  }
  return out;
}

std::vector<Integer> SUnitGroup::dlog(const TensorElement& a) const {
  if (a.level() != level_) throw InvalidInput("element level does not match the group");
  return dlog(s_->project(a));
}

std::vector<FieldElem> SUnitGroup::evaluate_components(std::span<const Integer> exponents) const {
  if (exponents.size() != group_.size()) throw DimensionMismatch("exponent vector length");
  const auto& comps = s_->components(level_);
  std::vector<FieldElem> out;
  std::size_t rational_torsion = group_.free_rank;
  std::size_t field_torsion = group_.free_rank + static_cast<std::size_t>(std::count_if(
                                                     comps.begin(), comps.end(), [](const Component& c) { return !c.quadratic; }));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (!comps[c].quadratic) {
      Rational x = exponents[rational_torsion++] % 2 == 0 ? 1 : -1;
      for (std::size_t i = 0; i < s_primes_.size(); ++i) {
        const Integer& k = exponents[slots_[c].offset + i];
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), s_primes_[i].get_mpz_t(), Integer(abs(k)).get_ui());
        x = k >= 0 ? Rational(x * pk) : Rational(x / pk);
      }
      out.push_back(FieldElem::rational(x, unit_value(*s_).D()));
      continue;
    }
    std::vector<Integer> ex(exponents.begin() + static_cast<long>(slots_[c].offset),
                            exponents.begin() + static_cast<long>(slots_[c].offset + k_units_->free_rank()));
    ex.push_back(exponents[field_torsion++]);
    out.push_back(k_units_->evaluate(ex));
  }
  return out;
}

TensorElement SUnitGroup::evaluate(std::span<const Integer> exponents) const {
  return s_->lift(level_, evaluate_components(exponents));
}

SUnitGroup s_unit_group(const EtaleAlgebraPtr& f, unsigned level, std::vector<Integer> s_primes,
                        const ArithmeticOptions& opts) {
  return SUnitGroup(Splitting::make(f), level, std::move(s_primes), nullptr, opts);
}

FgSolution solve_in_fg_abelian(const FgAbelianGroup& g, const FgAbelianGroup& h, const IntegerMatrix& hom,
                               std::span<const Integer> target) {
  if (hom.rows() != h.size() || hom.cols() != g.size() || target.size() != h.size())
    throw DimensionMismatch("homomorphism shape does not match the groups");
  const std::size_t ht = h.torsion_invariants.size();
  // m·(torsion generator) = 0 in g must map to 0 in h.
  for (std::size_t j = 0; j < g.torsion_invariants.size(); ++j) {
    const std::size_t col = g.free_rank + j;
    for (std::size_t r = 0; r < h.size(); ++r) {
      const Integer image = g.torsion_invariants[j] * hom(r, col);
      const bool ok = r < h.free_rank ? image == 0
                                      : mpz_divisible_p(image.get_mpz_t(), h.torsion_invariants[r - h.free_rank].get_mpz_t()) != 0;
      if (!ok) throw InconsistentPresentation("homomorphism does not respect the torsion of its source");
    }
  }
  IntegerMatrix system(h.size(), g.size() + ht);
  for (std::size_t r = 0; r < h.size(); ++r)
    for (std::size_t c = 0; c < g.size(); ++c) system(r, c) = hom(r, c);
  for (std::size_t j = 0; j < ht; ++j) system(h.free_rank + j, g.size() + j) = -h.torsion_invariants[j];

  const IntegerSolution sol = solve_integer(system, target);
  FgSolution out;
  out.soluble = sol.soluble;
  if (!sol.soluble) {
    out.certificate = sol.certificate;
    out.modulus = sol.modulus;
    return out;
  }
  out.preimage.assign(sol.particular.begin(), sol.particular.begin() + static_cast<long>(g.size()));
  for (std::size_t j = 0; j < g.torsion_invariants.size(); ++j) {
    Integer& x = out.preimage[g.free_rank + j];
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), g.torsion_invariants[j].get_mpz_t());
  }
  return out;
}

Trivialisation trivialize_coboundary(const Cocycle2& b, const ArithmeticOptions& opts) {
  const TensorElement& bv = b.value();
  const SplittingPtr s = Splitting::make(bv.algebra());
  check_disc(*s, opts);

  std::vector<Integer> primes = ramified_places(bv.algebra());
  for (const auto& p : class_group(*s, opts).generating_primes()) primes.push_back(p);
  for (const auto& p : divisor_of(*s, bv).primes()) primes.push_back(p);
  primes = normalise_primes(std::move(primes));

  std::shared_ptr<const FieldSUnits> k_units;
  if (s->field()) k_units = std::make_shared<const FieldSUnits>(s->field(), primes, opts.factor_base);
  const SUnitGroup g(s, 1, primes, k_units, opts);
  const SUnitGroup h(s, 2, primes, k_units, opts);

  const std::size_t gn = g.group().size(), hn = h.group().size();
  IntegerMatrix hom(hn, gn);
  std::vector<Integer> e(gn, Integer(0));
  for (std::size_t j = 0; j < gn; ++j) {
    e[j] = 1;
    const auto image = h.dlog(delta_values(*s, 1, g.evaluate_components(e)));
    e[j] = 0;
    for (std::size_t r = 0; r < hn; ++r) hom(r, j) = image[r];
  }
  const FgSolution sol = solve_in_fg_abelian(g.group(), h.group(), hom, h.dlog(bv));
  if (!sol.soluble) throw NotACoboundary("the cocycle is not a coboundary of an S-unit");

  TensorElement a = g.evaluate(sol.preimage);
  if (!(delta(a) == bv)) throw InconsistentPresentation("trivialisation failed its exact check");
  return {std::move(a), std::move(primes)};
}

}  // namespace amitsur
