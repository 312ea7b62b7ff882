#include <benchmark/benchmark.h>

#include "fatlab/exact.hpp"
#include "fatlab/rng.hpp"

using namespace fatlab;

static void BM_QuadSign(benchmark::State& state) {
  auto rng = make_rng(1);
  std::vector<QuadNum> xs;
  for (int i = 0; i < 256; ++i) {
    Rational a(static_cast<long long>(uniform_below(rng, 2001)) - 1000,
               static_cast<long long>(uniform_below(rng, 1000)) + 1);
    Rational b(static_cast<long long>(uniform_below(rng, 2001)) - 1000,
               static_cast<long long>(uniform_below(rng, 1000)) + 1);
    xs.emplace_back(a, b, 5);
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad_sign(xs[i++ & 255]));
  }
}
BENCHMARK(BM_QuadSign);

static void BM_GFMake(benchmark::State& state) {
  const long q = state.range(0);
  for (auto _ : state) {
    auto f = gf_make(q);
    benchmark::DoNotOptimize(f.generator());
  }
}
BENCHMARK(BM_GFMake)->Arg(9)->Arg(29)->Arg(81);

static void BM_GFMulChain(benchmark::State& state) {
  auto f = gf_make(81);
  long x = f.generator();
  long acc = 1;
  for (auto _ : state) {
    acc = f.mul(acc, x);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_GFMulChain);

BENCHMARK_MAIN();
