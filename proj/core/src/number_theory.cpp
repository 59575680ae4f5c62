#include "amitsur/number_theory.hpp"

#include <algorithm>
#include <map>

#include "amitsur/errors.hpp"

namespace amitsur {

namespace {

constexpr unsigned long kTrialBound = 10000;

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho; n is odd, composite and not a prime power of a small prime.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer root;
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Integer, unsigned> sub;
        factor_into(root, sub);
        for (const auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
        return;
      }
    }
  }
  const Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Integer next_prime(const Integer& n) {
  Integer p;
  mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
  return p;
}

std::vector<PrimePower> factor_integer(const Integer& n_in) {
  if (n_in == 0) throw InvalidInput("cannot factor zero");
  Integer n = abs(n_in);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p <= kTrialBound && n > 1; p += (p == 2 ? 1 : 2)) {
    if (static_cast<unsigned long>(p) * p > n && n.fits_ulong_p()) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++found[Integer(p)];
    }
  }
  factor_into(n, found);
  std::vector<PrimePower> result;
  for (const auto& [p, e] : found) result.push_back({p, e});
  return result;
}

std::vector<Integer> prime_support(const Rational& q) {
  if (q == 0) throw InvalidInput("prime support of zero");
  std::vector<Integer> primes;
  for (const auto& pp : factor_integer(q.get_num())) primes.push_back(pp.prime);
  for (const auto& pp : factor_integer(q.get_den())) primes.push_back(pp.prime);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  Integer m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& q, const Integer& p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw InvalidInput("isqrt of negative");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::pair<Integer, Integer> squarefree_decomposition(const Integer& n) {
  if (n == 0) throw InvalidInput("squarefree part of zero");
  Integer s = 1, r = sgn(n);
  for (const auto& [p, e] : factor_integer(n)) {
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) r *= p;
  }
  return {s, r};
}

Integer sqrt_mod_prime(const Integer& a_in, const Integer& p) {
  Integer a = a_in % p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  if (kronecker(a, p) != 1) throw InvalidInput("not a quadratic residue");
  // Tonelli-Shanks
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (kronecker(z, p) != -1) ++z;
  auto powm = [&](const Integer& b, const Integer& e) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  Integer c = powm(z, q), x = powm(a, (q + 1) / 2), t = powm(a, q);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    Integer b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
    x = (x * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    m = i;
  }
  return x;
}

int kronecker(const Integer& a, const Integer& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd r;
  mpz_gcdext(r.gcd.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace amitsur
