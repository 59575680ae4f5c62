#include "amitsur/etale.hpp"

#include <utility>

#include "amitsur/errors.hpp"

namespace amitsur {

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void require_compatible(const TensorElement& a, const TensorElement& b) {
  if (a.algebra() != b.algebra() && !(a.field().poly() == b.field().poly()))
    throw DimensionMismatch("tensor elements over different algebras");
  if (a.level() != b.level()) throw DimensionMismatch("tensor elements at different levels");
}

}  // namespace

EtaleAlgebra::EtaleAlgebra(const Polynomial& p) : p_(p), d_(static_cast<std::size_t>(p.degree())) {
  factors_ = poly_factor(p_);
  // X^k mod P by the recurrence X·(X^{k-1} mod P).
  red_.assign(2 * d_ - 1, std::vector<Rational>(d_, Rational(0)));
  red_[0][0] = 1;
  for (std::size_t k = 1; k < red_.size(); ++k) {
    const Rational top = red_[k - 1][d_ - 1];
    for (std::size_t j = d_ - 1; j > 0; --j) red_[k][j] = red_[k - 1][j - 1];
    red_[k][0] = 0;
    if (top != 0)
      for (std::size_t j = 0; j < d_; ++j) red_[k][j] -= top * p_.coeff(j);
  }
  // Tr(X^k) = Σ_j (coefficient of X^j in X^{k+j} mod P).
  traces_.assign(red_.size(), Rational(0));
  for (std::size_t k = 0; k < traces_.size(); ++k) {
    std::vector<Rational> cur = red_[k];
    for (std::size_t j = 0; j < d_; ++j) {
      traces_[k] += cur[j];
      const Rational top = cur[d_ - 1];
      for (std::size_t t = d_ - 1; t > 0; --t) cur[t] = cur[t - 1];
      cur[0] = 0;
      if (top != 0)
        for (std::size_t t = 0; t < d_; ++t) cur[t] -= top * p_.coeff(t);
    }
  }
}

std::shared_ptr<const EtaleAlgebra> EtaleAlgebra::make(const Polynomial& p) {
  if (p.degree() < 1) throw InvalidInput("defining polynomial must be nonconstant");
  if (p.leading() != 1) throw InvalidInput("defining polynomial must be monic");
  if (!is_separable(p)) throw InvalidInput("defining polynomial must be separable");
  return std::shared_ptr<const EtaleAlgebra>(new EtaleAlgebra(p));
}

TensorElement::TensorElement(EtaleAlgebraPtr f, unsigned level, std::vector<Rational> coeffs)
    : f_(std::move(f)), level_(level), coeffs_(std::move(coeffs)) {
  if (!f_) throw InvalidInput("tensor element without an algebra");
  if (coeffs_.size() != ipow(f_->degree(), level_ + 1))
    throw DimensionMismatch("coefficient count must be d^(level+1)");
}

TensorElement TensorElement::zero(EtaleAlgebraPtr f, unsigned level) {
  const std::size_t n = ipow(f->degree(), level + 1);
  return TensorElement(std::move(f), level, std::vector<Rational>(n, Rational(0)));
}

TensorElement TensorElement::one(EtaleAlgebraPtr f, unsigned level) {
  TensorElement t = zero(std::move(f), level);
  t.coeffs_[0] = 1;
  return t;
}

TensorElement TensorElement::monomial(EtaleAlgebraPtr f, std::span<const unsigned> exponents, const Rational& c) {
  if (exponents.empty()) throw InvalidInput("monomial needs at least one exponent");
  TensorElement t = zero(std::move(f), static_cast<unsigned>(exponents.size() - 1));
  t.coeffs_[t.index(exponents)] = c;
  return t;
}

TensorElement TensorElement::variable(EtaleAlgebraPtr f, unsigned level, unsigned i) {
  if (i > level) throw InvalidInput("variable index exceeds level");
  const std::size_t d = f->degree();
  if (d == 1) return one(std::move(f), level) * (-f->poly().coeff(0));
  std::vector<unsigned> e(level + 1, 0);
  e[i] = 1;
  return monomial(std::move(f), e);
}

TensorElement TensorElement::from_polynomial(EtaleAlgebraPtr f, const Polynomial& q) {
  const Polynomial r = divmod(q, f->poly()).second;
  TensorElement t = zero(std::move(f), 0);
  for (std::size_t k = 0; k < r.coefficients().size(); ++k) t.coeffs_[k] = r.coefficients()[k];
  return t;
}

std::size_t TensorElement::index(std::span<const unsigned> exponents) const {
  if (exponents.size() != level_ + 1) throw DimensionMismatch("exponent tuple length differs from level+1");
  std::size_t idx = 0;
  for (unsigned e : exponents) {
    if (e >= degree()) throw InvalidInput("exponent not reduced");
    idx = idx * degree() + e;
  }
  return idx;
}

std::vector<unsigned> TensorElement::exponents(std::size_t index) const {
  std::vector<unsigned> e(level_ + 1);
  for (std::size_t k = level_ + 1; k-- > 0;) {
    e[k] = static_cast<unsigned>(index % degree());
    index /= degree();
  }
  return e;
}

bool TensorElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool TensorElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_compatible(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  require_compatible(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool TensorElement::operator==(const TensorElement& o) const {
  return level_ == o.level_ && f_->poly() == o.f_->poly() && coeffs_ == o.coeffs_;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) { return tensor_mul(a, b); }

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  require_compatible(a, b);
  const std::size_t d = a.degree();
  const unsigned axes = a.level() + 1;
  if (d == 1) return TensorElement(a.algebra(), a.level(), {a[0] * b[0]});

  // Unreduced product on a (2d-1)^axes grid.
  const std::size_t w = 2 * d - 1;
  std::vector<Rational> grid(ipow(w, axes), Rational(0));
  std::vector<std::size_t> spread(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t idx = i, out = 0, place = 1;
    for (unsigned k = 0; k < axes; ++k) {
      out += (idx % d) * place;
      idx /= d;
      place *= w;
    }
    spread[i] = out;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      grid[spread[i] + spread[j]] += a[i] * b[j];
    }
  }

  // Reduce one axis at a time, last axis first; the reduced axes are stored with stride d.
  const auto& red = a.field().reduction();
  std::vector<std::size_t> dims(axes, w);
  for (unsigned ax = axes; ax-- > 0;) {
    std::size_t inner = 1;
    for (unsigned k = ax + 1; k < axes; ++k) inner *= dims[k];
    std::size_t outer = 1;
    for (unsigned k = 0; k < ax; ++k) outer *= dims[k];
    std::vector<Rational> next(outer * d * inner, Rational(0));
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t e = 0; e < w; ++e)
        for (std::size_t in = 0; in < inner; ++in) {
          const Rational& c = grid[(o * w + e) * inner + in];
          if (c == 0) continue;
          if (e < d) {
            next[(o * d + e) * inner + in] += c;
          } else {
            for (std::size_t t = 0; t < d; ++t)
              if (red[e][t] != 0) next[(o * d + t) * inner + in] += c * red[e][t];
          }
        }
    grid = std::move(next);
    dims[ax] = d;
  }
  return TensorElement(a.algebra(), a.level(), std::move(grid));
}

RationalMatrix multiplication_matrix(const TensorElement& a) {
  const std::size_t n = a.size();
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> basis(n, Rational(0));
    basis[j] = 1;
    const TensorElement col = tensor_mul(a, TensorElement(a.algebra(), a.level(), std::move(basis)));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

TensorElement tensor_inv(const TensorElement& a) {
  const RationalMatrix m = multiplication_matrix(a);
  std::vector<Rational> one(a.size(), Rational(0));
  one[0] = 1;
  auto sol = solve_linear(m, one);
  if (!sol.consistent || !sol.kernel.empty()) {
    auto ann = kernel(m);
    throw NonUnit("element is a zero divisor", ann.empty() ? std::vector<Rational>{} : ann.front());
  }
  return TensorElement(a.algebra(), a.level(), std::move(sol.particular));
}

TensorElement tensor_pow(const TensorElement& a, long e) {
  TensorElement base = e < 0 ? tensor_inv(a) : a;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  TensorElement r = TensorElement::one(a.algebra(), a.level());
  while (k > 0) {
    if (k & 1) r = tensor_mul(r, base);
    k >>= 1;
    if (k > 0) base = tensor_mul(base, base);
  }
  return r;
}

TensorElement epsilon(unsigned i, const TensorElement& a) {
  if (i > a.level() + 1) throw InvalidInput("face index out of range");
  const std::size_t d = a.degree();
  const unsigned n = a.level();
  std::vector<Rational> out(a.size() * d, Rational(0));
  std::vector<unsigned> e(n + 2, 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    const auto src = a.exponents(k);
    for (unsigned j = 0, s = 0; j < n + 2; ++j) e[j] = (j == i) ? 0 : src[s++];
    std::size_t idx = 0;
    for (unsigned x : e) idx = idx * d + x;
    out[idx] = a[k];
  }
  return TensorElement(a.algebra(), n + 1, std::move(out));
}

TensorElement delta(const TensorElement& a) {
  const TensorElement inv = tensor_inv(a);
  TensorElement r = TensorElement::one(a.algebra(), a.level() + 1);
  for (unsigned i = 0; i <= a.level() + 1; ++i) r = tensor_mul(r, epsilon(i, i % 2 == 0 ? a : inv));
  return r;
}

Rational trace_F(const TensorElement& a) {
  if (a.level() != 0) throw InvalidInput("trace_F expects a level-0 element");
  Rational t = 0;
  const auto& tau = a.field().power_traces();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) t += a[k] * tau[k];
  return t;
}

TensorElement trace_r2_r1(const TensorElement& a) {
  if (a.level() != 2) throw InvalidInput("trace_r2_r1 expects a level-2 element");
  const std::size_t d = a.degree();
  const auto& tau = a.field().power_traces();
  std::vector<Rational> out(d * d, Rational(0));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        const Rational& c = a[(x * d + y) * d + z];
        if (c != 0) out[x * d + z] += c * tau[y];
      }
  return TensorElement(a.algebra(), 1, std::move(out));
}

}  // namespace amitsur
