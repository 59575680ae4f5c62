#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "amitsur/rational.hpp"

namespace amitsur {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

bool is_prime(const Integer& n);
Integer next_prime(const Integer& n);

/// Factorisation of |n| (n != 0) into primes, ascending. Trial division then Pollard-Brent rho.
std::vector<PrimePower> factor_integer(const Integer& n);

/// Distinct primes dividing the numerator or denominator of q (q != 0).
std::vector<Integer> prime_support(const Rational& q);

/// Exponent of p in n (n != 0).
int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& q, const Integer& p);

Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

/// Writes n = s²·r with r squarefree and sign(r) = sign(n).
std::pair<Integer, Integer> squarefree_decomposition(const Integer& n);

/// Returns x with x² ≡ a (mod p) for an odd prime p and a quadratic residue a.
Integer sqrt_mod_prime(const Integer& a, const Integer& p);

int kronecker(const Integer& a, const Integer& n);

struct ExtendedGcd {
  Integer gcd, s, t;  // s·a + t·b = gcd >= 0
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Floor division for integers of any sign.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace amitsur
