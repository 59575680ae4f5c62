#include <benchmark/benchmark.h>

#include "amitsur/algebra.hpp"
#include "amitsur/arithmetic.hpp"
#include "amitsur/field_units.hpp"
#include "amitsur/integer_matrix.hpp"
#include "amitsur/pipeline.hpp"

using namespace amitsur;

namespace {

EtaleAlgebraPtr split_algebra(std::size_t d) {
  Polynomial p{Rational(1)};
  for (std::size_t k = 0; k < d; ++k) p = p * Polynomial{Rational(-static_cast<long>(k)), Rational(1)};
  return EtaleAlgebra::make(p);
}

TensorElement sample(const EtaleAlgebraPtr& f, unsigned level, Rng& rng) {
  auto t = TensorElement::zero(f, level);
  std::vector<Rational> c(t.size());
  for (auto& x : c) x = Rational(rng.uniform(-9, 9));
  return TensorElement(f, level, std::move(c));
}

void BM_TensorMul(benchmark::State& state) {
  auto f = split_algebra(static_cast<std::size_t>(state.range(0)));
  Rng rng(RngSeed{1});
  const TensorElement a = sample(f, 2, rng), b = sample(f, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_mul(a, b));
}
BENCHMARK(BM_TensorMul)->Arg(2)->Arg(3)->Arg(4);

void BM_ComputeCocycle(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const Instance inst = generate_instance(d, RngSeed{3}, Witness::SplitU);
  for (auto _ : state) benchmark::DoNotOptimize(present(inst.algebra, RngSeed{3}, {}, inst.split_u));
}
BENCHMARK(BM_ComputeCocycle)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(RngSeed{4});
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-50, 50);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_ClassGroup(benchmark::State& state) {
  auto k = std::make_shared<const QuadraticField>(Integer(static_cast<long>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(class_group(k));
}
BENCHMARK(BM_ClassGroup)->Arg(-5)->Arg(-4027)->Arg(-99991)->Arg(79)->Arg(10009)->Unit(benchmark::kMillisecond);

void BM_Trivialize(benchmark::State& state) {
  const std::vector<std::vector<long>> polys = {{0, -1, 1}, {-2, 0, 1}, {6, 0, 1}};
  std::vector<Rational> c;
  for (long x : polys[static_cast<std::size_t>(state.range(0))]) c.emplace_back(x);
  auto f = EtaleAlgebra::make(Polynomial(c));
  const SUnitGroup g = s_unit_group(f, 1, {2, 3, 5, 7});
  std::vector<Integer> e(g.group().size());
  for (std::size_t j = 0; j < g.group().free_rank; ++j) e[j] = static_cast<long>(j % 3) - 1;
  const Cocycle2 b(delta(g.evaluate(e)));
  for (auto _ : state) benchmark::DoNotOptimize(trivialize_coboundary(b));
}
BENCHMARK(BM_Trivialize)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ExplicitIsomorphism(benchmark::State& state) {
  const Instance inst = generate_instance(2, RngSeed{static_cast<std::uint64_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(explicit_isomorphism(inst.algebra, RngSeed{0}));
}
BENCHMARK(BM_ExplicitIsomorphism)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
