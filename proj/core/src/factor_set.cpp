#include <utility>

#include "amitsur/amitsur.hpp"
#include "amitsur/errors.hpp"

namespace amitsur {

namespace {

void check_roots(const EtaleAlgebra& f, const std::vector<Rational>& roots) {
  if (roots.size() != f.degree()) throw InvalidInput("need exactly d roots");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (f.poly()(roots[i]) != 0) throw InvalidInput("value is not a root of P");
    for (std::size_t j = 0; j < i; ++j)
      if (roots[i] == roots[j]) throw InvalidInput("roots are not distinct");
  }
}

}  // namespace

bool FactorSet::is_cocycle() const {
  const std::size_t d = degree();
  if (values.size() != d * d * d) return false;
  for (const auto& v : values)
    if (v == 0) return false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l)
          if ((*this)(i, k, j) * (*this)(i, j, l) != (*this)(i, k, l) * (*this)(k, j, l)) return false;
  return true;
}

std::vector<Rational> psi(const TensorElement& a, const std::vector<Rational>& roots) {
  check_roots(a.field(), roots);
  const std::size_t d = a.degree();
  // pow[r][e] = r^e
  std::vector<std::vector<Rational>> pow(d, std::vector<Rational>(d, Rational(1)));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t e = 1; e < d; ++e) pow[r][e] = pow[r][e - 1] * roots[r];
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t p = 0; p < out.size(); ++p) {
    const auto point = a.exponents(p);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0) continue;
      const auto e = a.exponents(k);
      Rational term = a[k];
      for (std::size_t s = 0; s < e.size(); ++s) term *= pow[point[s]][e[s]];
      out[p] += term;
    }
  }
  return out;
}

FactorSet factor_set_of(const Cocycle2& c, const std::vector<Rational>& roots) {
  return FactorSet{roots, psi(c.value(), roots)};
}

std::vector<Rational> brauer_differential(const std::vector<Rational>& values, std::size_t d, unsigned level) {
  const std::size_t slots = level + 2;
  std::size_t total = 1;
  for (std::size_t k = 0; k < slots; ++k) total *= d;
  if (values.size() * d != total) throw DimensionMismatch("array size does not match d^(level+1)");

  std::vector<Rational> out(total, Rational(1));
  std::vector<std::size_t> idx(slots);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t t = flat;
    for (std::size_t k = slots; k-- > 0;) {
      idx[k] = t % d;
      t /= d;
    }
    for (std::size_t drop = 0; drop < slots; ++drop) {
      std::size_t src = 0;
      for (std::size_t k = 0; k < slots; ++k)
        if (k != drop) src = src * d + idx[k];
      if (values[src] == 0) throw NonUnit("factor set value is zero");
      if (drop % 2 == 0)
        out[flat] *= values[src];
      else
        out[flat] /= values[src];
    }
  }
  return out;
}

RationalMatrix brauer_mul(const RationalMatrix& l, const RationalMatrix& l2, const FactorSet& fs) {
  const std::size_t d = fs.degree();
  if (l.rows() != d || l.cols() != d || l2.rows() != d || l2.cols() != d)
    throw DimensionMismatch("Brauer product operands must be d×d");
  RationalMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out(i, j) += l(i, k) * fs(i, k, j) * l2(k, j);
  return out;
}

ReducedFactorSet reduce_factor_set(const FactorSet& fs) {
  const std::size_t d = fs.degree();
  RationalMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = i == j ? 1 / fs(i, i, i) : Rational(1);
  const auto da = brauer_differential(a.entries(), d, 1);
  FactorSet out{fs.roots, fs.values};
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] *= da[k];
  return {std::move(out), std::move(a)};
}

}  // namespace amitsur
