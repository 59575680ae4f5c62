#include "amitsur/quadratic_field.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

#include "amitsur/errors.hpp"
#include "amitsur/number_theory.hpp"

namespace amitsur {

namespace {

double log_abs(const Integer& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}

double log_abs(const Rational& q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

// log(e^x + e^y)
double log_add(double x, double y) {
  const double hi = std::max(x, y), lo = std::min(x, y);
  return hi + std::log1p(std::exp(lo - hi));
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

// ---- FieldElem --------------------------------------------------------------

FieldElem::FieldElem(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

void FieldElem::adopt(const FieldElem& o) {
  if (d_ == o.d_ || o.b_ == 0) return;
  if (b_ != 0) throw DimensionMismatch("elements of different quadratic fields");
  d_ = o.d_;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  adopt(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  adopt(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  adopt(o);
  if (o.b_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + b_ * o.b_ * d_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (a_ != o.a_ || b_ != o.b_) return false;
  return b_ == 0 || d_ == o.d_;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw NonUnit("zero has no inverse");
  const Rational n = norm();
  return FieldElem(a_ / n, -b_ / n, d_);
}

FieldElem FieldElem::pow(long e) const {
  FieldElem base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElem r = FieldElem::rational(1, d_);
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return r;
}

double FieldElem::log_abs() const {
  if (is_zero()) throw NonUnit("log of zero");
  if (b_ == 0) return amitsur::log_abs(a_);
  if (d_ < 0) return 0.5 * amitsur::log_abs(norm());
  const double lb = amitsur::log_abs(b_) + 0.5 * amitsur::log_abs(d_);
  if (a_ == 0) return lb;
  if (sgn(a_) == sgn(b_)) return log_add(amitsur::log_abs(a_), lb);
  // Cancellation: |x| = |N(x)| / |x̄| and x̄ has terms of equal sign.
  return amitsur::log_abs(norm()) - log_add(amitsur::log_abs(a_), lb);
}

std::string to_string(const FieldElem& x) {
  if (x.b() == 0) return to_string(x.a());
  return to_string(x.a()) + (x.b() < 0 ? " - " : " + ") + to_string(Rational(abs(x.b()))) + "*sqrt(" +
         to_string(x.D()) + ")";
}

std::string to_string(PlaceKind k) {
  switch (k) {
    case PlaceKind::Rational: return "rational";
    case PlaceKind::SplitPlus: return "split-plus";
    case PlaceKind::SplitMinus: return "split-minus";
    case PlaceKind::Inert: return "inert";
    case PlaceKind::Ramified: return "ramified";
  }
  return "unknown";
}

// ---- QuadraticField ---------------------------------------------------------

QuadraticField::QuadraticField(const Integer& d) : d_(d) {
  if (d_ == 0 || d_ == 1) throw InvalidInput("quadratic field needs D ∉ {0, 1}");
  if (squarefree_decomposition(d_).first != 1) throw InvalidInput("D must be squarefree");
  if (mod(d_, 4) == 1) {
    disc_ = d_;
    t_ = 1;
    n_ = (1 - d_) / 4;
  } else {
    disc_ = 4 * d_;
    t_ = 0;
    n_ = -d_;
  }
}

FieldElem QuadraticField::omega() const {
  return t_ == 1 ? FieldElem(Rational(1, 2), Rational(1, 2), d_) : FieldElem(0, 1, d_);
}

FieldElem QuadraticField::from_omega(const Integer& x, const Integer& y) const {
  return element(Rational(x)) + omega() * element(Rational(y));
}

OmegaCoords QuadraticField::omega_coords(const FieldElem& x, Integer& m) const {
  // √D = 2ω − 1 when ω = (1+√D)/2.
  const Rational cx = t_ == 1 ? x.a() - x.b() : x.a();
  const Rational cy = t_ == 1 ? 2 * x.b() : x.b();
  mpz_lcm(m.get_mpz_t(), cx.get_den_mpz_t(), cy.get_den_mpz_t());
  return {cx.get_num() * (m / cx.get_den()), cy.get_num() * (m / cy.get_den())};
}

Integer QuadraticField::omega_norm_form(const Integer& x, const Integer& y) const {
  return x * x + t_ * x * y + n_ * y * y;
}

std::vector<PrimeIdeal> QuadraticField::primes_above(const Integer& p) const {
  if (mpz_divisible_p(disc_.get_mpz_t(), p.get_mpz_t())) return {{p, PlaceKind::Ramified}};
  if (kronecker(disc_, p) == 1) return {{p, PlaceKind::SplitPlus}, {p, PlaceKind::SplitMinus}};
  return {{p, PlaceKind::Inert}};
}

Integer QuadraticField::residue_root(const PrimeIdeal& q) const {
  const Integer& p = q.p;
  if (q.kind == PlaceKind::Ramified) {
    if (t_ == 0) return mod(d_, p) == 0 ? Integer(0) : mod(d_, 2);
    return (p + 1) / 2;
  }
  if (q.kind != PlaceKind::SplitPlus && q.kind != PlaceKind::SplitMinus)
    throw InvalidInput("residue root only defined for split or ramified primes");
  Integer r1, r2;
  if (p == 2) {
    r1 = 0;
    r2 = 1;
  } else {
    const Integer s = sqrt_mod_prime(mod(t_ * t_ - 4 * n_, p), p);
    const Integer inv2 = (p + 1) / 2;
    r1 = mod((t_ + s) * inv2, p);
    r2 = mod((t_ - s) * inv2, p);
    if (r2 < r1) std::swap(r1, r2);
  }
  return q.kind == PlaceKind::SplitPlus ? r1 : r2;
}

unsigned QuadraticField::ramification_index(const Integer& p) const {
  return mpz_divisible_p(disc_.get_mpz_t(), p.get_mpz_t()) ? 2 : 1;
}

Integer QuadraticField::norm(const PrimeIdeal& q) const { return q.kind == PlaceKind::Inert ? q.p * q.p : q.p; }

PrimeIdeal QuadraticField::conjugate(const PrimeIdeal& q) const {
  if (q.kind == PlaceKind::SplitPlus) return {q.p, PlaceKind::SplitMinus};
  if (q.kind == PlaceKind::SplitMinus) return {q.p, PlaceKind::SplitPlus};
  return q;
}

long QuadraticField::valuation(const FieldElem& x, const PrimeIdeal& q) const {
  if (x.is_zero()) throw NonUnit("valuation of zero");
  Integer m;
  auto [cx, cy] = omega_coords(x, m);
  const Integer& p = q.p;
  const long vm = amitsur::valuation(m, p);
  switch (q.kind) {
    case PlaceKind::Inert: return amitsur::valuation(omega_norm_form(cx, cy), p) / 2 - vm;
    case PlaceKind::Ramified: return amitsur::valuation(omega_norm_form(cx, cy), p) - 2 * vm;
    case PlaceKind::SplitPlus:
    case PlaceKind::SplitMinus: {
      long t = 0;
      while (mpz_divisible_p(cx.get_mpz_t(), p.get_mpz_t()) && mpz_divisible_p(cy.get_mpz_t(), p.get_mpz_t())) {
        cx /= p;
        cy /= p;
        ++t;
      }
      const Integer r = residue_root(q);
      if (mod(cx + cy * r, p) == 0) t += amitsur::valuation(omega_norm_form(cx, cy), p);
      return t - vm;
    }
    case PlaceKind::Rational: return amitsur::valuation(x.a(), p);
  }
  return 0;
}

std::vector<Integer> QuadraticField::support_primes(const FieldElem& x) const {
  if (x.is_zero()) throw NonUnit("support of zero");
  Integer m;
  auto [cx, cy] = omega_coords(x, m);
  std::set<Integer> out;
  for (const auto& f : factor_integer(omega_norm_form(cx, cy))) out.insert(f.prime);
  for (const auto& f : factor_integer(m)) out.insert(f.prime);
  return {out.begin(), out.end()};
}

unsigned QuadraticField::torsion_order() const {
  if (d_ == -1) return 4;
  if (d_ == -3) return 6;
  return 2;
}

FieldElem QuadraticField::torsion_generator() const {
  if (d_ == -1) return element(0, 1);
  if (d_ == -3) return element(Rational(1, 2), Rational(1, 2));
  return element(-1);
}

const FieldElem& QuadraticField::fundamental_unit() const {
  if (!is_real()) throw InvalidInput("imaginary quadratic fields have unit rank 0");
  std::call_once(unit_once_, [this] {
    // ω = (P + √D)/Q; a = ⌊(P + √D)/Q⌋, P' = aQ − P, Q' = (D − P'²)/Q.
    const Integer s = isqrt(d_);
    Integer P = t_, Q = t_ == 1 ? Integer(2) : Integer(1);
    Integer p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
    for (;;) {
      Integer a = Q > 0 ? floor_div(P + s, Q) : -floor_div(P + s + 1, -Q);
      Integer p = a * p_prev + p_prev2, q = a * q_prev + q_prev2;
      p_prev2 = p_prev;
      p_prev = p;
      q_prev2 = q_prev;
      q_prev = q;
      const Integer nrm = omega_norm_form(p, -q);
      if (nrm == 1 || nrm == -1) {
        // p − qω has absolute value < 1; its conjugate p − qω̄ = p − qt + qω is ε.
        FieldElem e = from_omega(p - q * t_, q);
        if (e.a() < 0 && e.b() < 0) e = -e;
        unit_ = e.log_abs() < 0 ? e.inverse() : e;
        return;
      }
      P = a * Q - P;
      Q = (d_ - P * P) / Q;
    }
  });
  return unit_;
}

const Integer& QuadraticField::class_number() const {
  std::call_once(h_once_, [this] {
    Integer h = count_form_classes(disc_);
    if (is_real() && fundamental_unit().norm() == 1) h /= 2;
    h_ = h;
  });
  return h_;
}

double QuadraticField::minkowski_bound() const {
  const double root = std::sqrt(std::fabs(disc_.get_d()));
  return is_real() ? root / 2 : 2 * root / std::numbers::pi;
}

double QuadraticField::bach_bound() const {
  const double l = std::log(std::fabs(disc_.get_d()));
  return 12 * l * l;
}

Integer count_form_classes(const Integer& disc) {
  if (disc < 0) {
    long count = 0;
    const Integer ad = -disc;
    for (Integer a = 1; 3 * a * a <= ad; ++a)
      for (Integer b = -a + 1; b <= a; ++b) {
        if (mod(b - disc, 2) != 0) continue;
        const Integer num = b * b - disc;
        if (!mpz_divisible_p(num.get_mpz_t(), Integer(4 * a).get_mpz_t())) continue;
        const Integer c = num / (4 * a);
        if (c < a || (b < 0 && a == c)) continue;
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) ++count;
      }
    return count;
  }

  // Reduced forms: √Δ − b < 2|a| < √Δ + b, 0 < b < √Δ; cycles of ρ are the narrow classes.
  const Integer s = isqrt(disc);
  using Form = std::tuple<Integer, Integer, Integer>;
  std::set<Form> reduced;
  for (Integer b = 1; b <= s; ++b) {
    if (mod(b - disc, 2) != 0) continue;
    const Integer n = (disc - b * b) / 4;
    if (n <= 0) continue;
    for (const Integer& a : divisors(n))
      for (int sign : {1, -1}) {
        const Integer A = sign * a, C = -n / A;
        const Integer lo = 2 * a + b, hi = 2 * a - b;
        if (lo * lo <= disc) continue;
        if (hi > 0 && hi * hi >= disc) continue;
        Integer g;
        mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), b.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), C.get_mpz_t());
        if (g == 1) reduced.emplace(A, b, C);
      }
  }
  long cycles = 0;
  std::set<Form> seen;
  for (const auto& start : reduced) {
    if (seen.count(start)) continue;
    ++cycles;
    Form f = start;
    while (seen.insert(f).second) {
      const auto& [a, b, c] = f;
      const Integer two_c = 2 * abs(c);
      const Integer bs = s - mod(s + b, two_c);
      const Integer as = (bs * bs - disc) / (4 * c);
      f = Form(c, bs, as);
      if (!reduced.count(f)) throw ComputationLimit("reduction cycle left the set of reduced forms");
    }
  }
  return cycles;
}

}  // namespace amitsur
