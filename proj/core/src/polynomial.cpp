#include "amitsur/polynomial.hpp"

#include "amitsur/errors.hpp"
#include "amitsur/matrix.hpp"

namespace amitsur {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p = constant(1);
  for (const auto& r : roots) p = p * Polynomial{-r, 1};
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(a.degree() - db + 1);
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational q = rem[k] * inv_lead;
    quot[k - db] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coefficients()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_separable(const Polynomial& p) {
  if (p.degree() < 1) throw InvalidInput("separability test needs a nonconstant polynomial");
  return poly_gcd(p, p.derivative()).is_one();
}

Rational discriminant(const Polynomial& p) {
  if (p.degree() < 1 || p.leading() != 1) throw InvalidInput("discriminant needs a monic nonconstant polynomial");
  const auto d = static_cast<std::size_t>(p.degree());
  // Newton power sums s_k = Σ r^k for k < 2d−1.
  std::vector<Rational> s(2 * d - 1);
  const auto& c = p.coefficients();
  s[0] = static_cast<long>(d);
  for (std::size_t k = 1; k < s.size(); ++k) {
    Rational acc = 0;
    // Newton: s_k + Σ_{i<k} c_{d-i} s_{k-i} + k·c_{d-k} = 0, the last term only when k <= d.
    for (std::size_t i = 1; i <= k && i <= d; ++i) {
      if (i < k)
        acc += c[d - i] * s[k - i];
      else
        acc += c[d - i] * static_cast<long>(k);
    }
    s[k] = -acc;
  }
  RationalMatrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = s[i + j];
  return determinant(gram);
}

}  // namespace amitsur
