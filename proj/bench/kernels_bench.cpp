// Serial reference versus OpenMP for each counting kernel.

#include <benchmark/benchmark.h>

#include "glhopf/hc.hpp"

using namespace glhopf;
namespace k = glhopf::kernels;

namespace {

Algebra& algebra(int q) {
  static Algebra a2(FqContext::make(2)), a3(FqContext::make(3));
  return q == 2 ? a2 : a3;
}

k::LeviLayout layout(Algebra& alg, const Composition& c) {
  k::LeviLayout l{c, BlockKind::parabolic_upper, {}};
  for (const auto& t : alg.tables(c.parts())) l.factors.push_back(t.get());
  return l;
}

template <k::Backend B>
void conjugation_sweep(benchmark::State& state) {
  Algebra& alg = algebra(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  const auto& t = *alg.table(n);
  const auto& g = alg.group(n);
  for (auto _ : state) benchmark::DoNotOptimize(k::conjugation_sweep(t, g, B));
}

template <k::Backend B>
void induction_counts(benchmark::State& state) {
  Algebra& alg = algebra(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  const auto& t = *alg.table(n);
  const auto& conj = alg.conjugates(n);
  const auto l = layout(alg, Composition(std::vector<int>(n, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(k::induction_counts(t, conj, l, B));
}

template <k::Backend B>
void restriction_counts(benchmark::State& state) {
  Algebra& alg = algebra(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  const auto& t = *alg.table(n);
  const auto l = layout(alg, Composition(std::vector<int>(n, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(k::restriction_counts(t, l, B));
}

template <k::Backend B>
void fourier_counts(benchmark::State& state) {
  Algebra& alg = algebra(static_cast<int>(state.range(0)));
  const auto& t = *alg.table(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(k::fourier_residue_counts(t, B));
}

void sizes(benchmark::internal::Benchmark* b) { b->Args({2, 3})->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond); }

}  // namespace

BENCHMARK(conjugation_sweep<k::Backend::serial>)->Apply(sizes);
BENCHMARK(conjugation_sweep<k::Backend::omp>)->Apply(sizes);
BENCHMARK(induction_counts<k::Backend::serial>)->Apply(sizes);
BENCHMARK(induction_counts<k::Backend::omp>)->Apply(sizes);
BENCHMARK(restriction_counts<k::Backend::serial>)->Apply(sizes);
BENCHMARK(restriction_counts<k::Backend::omp>)->Apply(sizes);
BENCHMARK(fourier_counts<k::Backend::serial>)->Apply(sizes);
BENCHMARK(fourier_counts<k::Backend::omp>)->Apply(sizes);

BENCHMARK_MAIN();
