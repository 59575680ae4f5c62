// Factorisation over ℚ: squarefree decomposition, factorisation modulo a small
// prime (distinct-degree + Cantor-Zassenhaus), Hensel lifting to a power of p
// exceeding the Landau-Mignotte bound, then naive recombination of lifted factors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>

#include "amitsur/errors.hpp"
#include "amitsur/number_theory.hpp"
#include "amitsur/polynomial.hpp"
#include "amitsur/random.hpp"

namespace amitsur {

namespace {

using ZPoly = std::vector<Integer>;
using FpPoly = std::vector<std::int64_t>;

// ---- arithmetic in F_p[x] ---------------------------------------------------

struct Fp {
  std::int64_t p;

  std::int64_t norm(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, b = norm(a), e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  static void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

  FpPoly sub(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] - b[i]);
    trim(r);
    return r;
  }
  FpPoly add(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] + b[i]);
    trim(r);
    return r;
  }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
  }
  FpPoly scale(const FpPoly& a, std::int64_t c) const {
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * norm(c) % p;
    trim(r);
    return r;
  }
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const {
    FpPoly rem = a;
    if (deg(a) < deg(b)) return {{}, rem};
    FpPoly q(a.size() - b.size() + 1, 0);
    const std::int64_t il = inv(b.back());
    for (int k = deg(a); k >= deg(b); --k) {
      const std::int64_t c = rem[k] * il % p;
      q[k - deg(b)] = c;
      if (c == 0) continue;
      for (int j = 0; j <= deg(b); ++j) rem[k - deg(b) + j] = norm(rem[k - deg(b) + j] - c * b[j]);
    }
    rem.resize(b.size() - 1);
    trim(rem);
    trim(q);
    return {q, rem};
  }
  FpPoly mod(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  FpPoly monic(const FpPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  FpPoly powmod(FpPoly base, Integer e, const FpPoly& m) const {
    FpPoly r{1};
    base = mod(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mod(mul(r, base), m);
      base = mod(mul(base, base), m);
      e /= 2;
    }
    return r;
  }
  // s, t with s·a + t·b = 1 for coprime a, b.
  std::pair<FpPoly, FpPoly> bezout(const FpPoly& a, const FpPoly& b) const {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      FpPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::int64_t il = inv(r0.back());
    return {scale(s0, il), scale(t0, il)};
  }
  FpPoly derivative(const FpPoly& a) const {
    if (a.size() <= 1) return {};
    FpPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = norm(a[i] * static_cast<std::int64_t>(i % p));
    trim(d);
    return d;
  }

  // Monic squarefree f: full factorisation into monic irreducibles.
  std::vector<FpPoly> factor_squarefree(const FpPoly& f, Rng& rng) const {
    std::vector<std::pair<FpPoly, int>> ddf;
    FpPoly g = f, h{0, 1};
    const FpPoly x{0, 1};
    for (int i = 1; 2 * i <= deg(g); ++i) {
      h = powmod(h, Integer(p), g);
      FpPoly fac = gcd(g, sub(h, x));
      if (deg(fac) > 0) {
        ddf.emplace_back(fac, i);
        g = divmod(g, fac).first;
        h = mod(h, g);
      }
    }
    if (deg(g) > 0) ddf.emplace_back(g, deg(g));

    std::vector<FpPoly> out;
    std::function<void(const FpPoly&, int)> split = [&](const FpPoly& fac, int d) {
      if (deg(fac) == d) {
        out.push_back(fac);
        return;
      }
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      for (;;) {
        FpPoly a(deg(fac), 0);
        for (auto& c : a) c = rng.uniform(0, p - 1);
        trim(a);
        if (deg(a) < 1) continue;
        FpPoly b = sub(powmod(a, e, fac), FpPoly{1});
        FpPoly g2 = gcd(fac, b);
        if (deg(g2) > 0 && deg(g2) < deg(fac)) {
          split(g2, d);
          split(divmod(fac, g2).first, d);
          return;
        }
      }
    };
    for (const auto& [fac, d] : ddf) split(fac, d);
    return out;
  }
};

// ---- integer polynomials ----------------------------------------------------

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(ZPoly f) {
  ztrim(f);
  if (f.empty()) return f;
  Integer c = content(f);
  if (f.back() < 0) c = -c;
  for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return f;
}

ZPoly to_integer_poly(const Polynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly f;
  for (const auto& c : p.coefficients()) f.push_back(c.get_num() * (l / c.get_den()));
  return primitive_part(f);
}

Polynomial to_rational_poly(const ZPoly& f) {
  std::vector<Rational> c;
  for (const auto& x : f) c.emplace_back(x);
  return Polynomial(std::move(c));
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

FpPoly reduce(const ZPoly& f, std::int64_t p) {
  FpPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<std::int64_t>(mpz_fdiv_ui(f[i].get_mpz_t(), p));
  Fp::trim(r);
  return r;
}

ZPoly lift_coeffs(const FpPoly& f) { return ZPoly(f.begin(), f.end()); }

// Exact division over ℤ; nullopt unless g divides f with integral quotient.
std::optional<ZPoly> exact_quotient(const ZPoly& f, const ZPoly& g) {
  if (f.size() < g.size()) return std::nullopt;
  if (g.front() != 0 && f.front() != 0 && !mpz_divisible_p(f.front().get_mpz_t(), g.front().get_mpz_t()))
    return std::nullopt;
  ZPoly rem = f;
  ZPoly q(f.size() - g.size() + 1, 0);
  for (int k = static_cast<int>(f.size()) - 1; k >= static_cast<int>(g.size()) - 1; --k) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), g.back().get_mpz_t())) return std::nullopt;
    const Integer c = rem[k] / g.back();
    q[k - g.size() + 1] = c;
    for (std::size_t j = 0; j < g.size(); ++j) rem[k - g.size() + 1 + j] -= c * g[j];
  }
  ztrim(rem);
  if (!rem.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

// Lifts f ≡ lc·g·h (mod p) with g, h monic to the same congruence modulo p^k.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, const Fp& fp, unsigned k) {
  const Integer p(fp.p);
  const Integer lc = f.back();
  const std::int64_t lc_inv = fp.inv(static_cast<std::int64_t>(mpz_fdiv_ui(lc.get_mpz_t(), fp.p)));
  const auto [s, t] = fp.bezout(reduce(g, fp.p), reduce(h, fp.p));
  (void)s;
  Integer m = p;
  for (unsigned step = 1; step < k; ++step) {
    ZPoly diff = f;
    ZPoly prod = zmul(zmul(ZPoly{lc}, g), h);
    diff.resize(std::max(diff.size(), prod.size()), 0);
    for (std::size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
    for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(diff);
    const FpPoly e = fp.scale(reduce(diff, fp.p), lc_inv);
    const FpPoly gbar = reduce(g, fp.p), hbar = reduce(h, fp.p);
    // g·δh + h·δg ≡ e with deg δg < deg g.
    const FpPoly dg = fp.mod(fp.mul(e, t), gbar);
    const FpPoly dh = fp.divmod(fp.sub(e, fp.mul(hbar, dg)), gbar).first;
    ZPoly dgz = lift_coeffs(dg), dhz = lift_coeffs(dh);
    g.resize(std::max(g.size(), dgz.size()), 0);
    h.resize(std::max(h.size(), dhz.size()), 0);
    for (std::size_t i = 0; i < dgz.size(); ++i) g[i] += m * dgz[i];
    for (std::size_t i = 0; i < dhz.size(); ++i) h[i] += m * dhz[i];
    m *= p;
    g = zmod(g, m);
    h = zmod(h, m);
  }
}

// Lifts the monic modular factors of f to monic factors modulo p^k.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, const Fp& fp, unsigned k) {
  if (factors.size() == 1) {
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(fp.p), k);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c *= inv;
    return {zmod(g, m)};
  }
  const std::size_t half = factors.size() / 2;
  FpPoly a{1}, b{1};
  for (std::size_t i = 0; i < factors.size(); ++i) (i < half ? a : b) = fp.mul(i < half ? a : b, factors[i]);
  ZPoly g = lift_coeffs(a), h = lift_coeffs(b);
  hensel_pair(f, g, h, fp, k);
  std::vector<FpPoly> left(factors.begin(), factors.begin() + half), right(factors.begin() + half, factors.end());
  auto lg = hensel_lift(g, left, fp, k);
  auto lh = hensel_lift(h, right, fp, k);
  lg.insert(lg.end(), lh.begin(), lh.end());
  return lg;
}

// Irreducible factors of a primitive squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> factor_squarefree_integer(ZPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  Rng rng(RngSeed{0x5eed});

  // Pick among the first few good primes the one giving the fewest modular factors.
  std::int64_t best_p = 0;
  std::vector<FpPoly> best;
  int good = 0;
  for (std::int64_t p = 3; good < 5; p = next_prime(Integer(p)).get_si()) {
    const Fp fp{p};
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    const FpPoly fbar = reduce(f, p);
    if (Fp::deg(fp.gcd(fbar, fp.derivative(fbar))) > 0) continue;
    ++good;
    auto facs = fp.factor_squarefree(fp.monic(fbar), rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
  }
  if (best.size() == 1) return {f};

  const Fp fp{best_p};
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound = (isqrt(norm2) + 1) * abs(f.back());
  bound <<= static_cast<unsigned>(n);
  bound = 2 * bound + 1;
  unsigned k = 1;
  Integer modulus(best_p);
  while (modulus <= bound) {
    modulus *= best_p;
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_lift(f, best, fp, k);
  std::vector<ZPoly> result;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly g{f.back()};
      for (std::size_t i : idx) g = zmod(zmul(g, lifted[i]), modulus);
      g = primitive_part(symmetric(g, modulus));
      if (auto q = exact_quotient(f, g)) {
        result.push_back(g);
        f = *q;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + static_cast<long>(*it));
        found = true;
        break;
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) result.push_back(primitive_part(f));
  return result;
}

// Yun's algorithm over ℚ: monic squarefree a_i with P = lc·∏ a_i^i.
std::vector<std::pair<Polynomial, unsigned>> squarefree_factorisation(const Polynomial& p) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  const Polynomial a0 = poly_gcd(f, df);
  Polynomial b = divmod(f, a0).first;
  Polynomial c = divmod(df, a0).first;
  Polynomial d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const Polynomial a = poly_gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
  }
  return out;
}

bool factor_less(const PolyFactor& x, const PolyFactor& y) {
  if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
  const auto& a = x.factor.coefficients();
  const auto& b = y.factor.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return x.multiplicity < y.multiplicity;
}

}  // namespace

std::vector<PolyFactor> poly_factor(const Polynomial& p) {
  if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  std::vector<PolyFactor> out;
  for (const auto& [part, mult] : squarefree_factorisation(p)) {
    if (part.degree() == 1) {
      out.push_back({part, mult});
      continue;
    }
    for (const auto& g : factor_squarefree_integer(to_integer_poly(part)))
      out.push_back({to_rational_poly(g).monic(), mult});
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

}  // namespace amitsur
