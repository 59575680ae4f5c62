#pragma once

#include <initializer_list>
#include <vector>

#include "amitsur/etale.hpp"
#include "amitsur/random.hpp"

namespace test {

inline amitsur::Polynomial poly(std::initializer_list<long> c) {
  std::vector<amitsur::Rational> v;
  for (long x : c) v.emplace_back(x);
  return amitsur::Polynomial(std::move(v));
}

inline amitsur::Polynomial poly(const std::vector<long>& c) {
  return amitsur::Polynomial(std::vector<amitsur::Rational>(c.begin(), c.end()));
}

inline amitsur::EtaleAlgebraPtr algebra(std::initializer_list<long> c) {
  return amitsur::EtaleAlgebra::make(poly(c));
}

inline amitsur::EtaleAlgebraPtr algebra(const std::vector<long>& c) { return amitsur::EtaleAlgebra::make(poly(c)); }

inline amitsur::TensorElement random_element(const amitsur::EtaleAlgebraPtr& f, unsigned level, amitsur::Rng& rng,
                                             long lo = -4, long hi = 4) {
  auto t = amitsur::TensorElement::zero(f, level);
  std::vector<amitsur::Rational> c(t.size());
  for (auto& x : c) x = amitsur::Rational(rng.uniform(lo, hi));
  return amitsur::TensorElement(f, level, std::move(c));
}

// Random element that is a unit, by rejection.
inline amitsur::TensorElement random_unit(const amitsur::EtaleAlgebraPtr& f, unsigned level, amitsur::Rng& rng) {
  for (;;) {
    auto a = random_element(f, level, rng);
    if (amitsur::determinant(amitsur::multiplication_matrix(a)) != 0) return a;
  }
}

}  // namespace test
