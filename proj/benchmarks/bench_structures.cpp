#include <benchmark/benchmark.h>

#include "fatlab/compounds.hpp"
#include "fatlab/covers.hpp"
#include "fatlab/jewels.hpp"
#include "fatlab/rng.hpp"
#include "fatlab/zoo.hpp"

using namespace fatlab;

static void BM_Cell600Clone(benchmark::State& state) {
  cell600();  // build the cached model outside the loop
  for (auto _ : state) {
    CutResult cut = cut_600cell({0});
    benchmark::DoNotOptimize(cut.lattice.cx.n_cells());
  }
}
BENCHMARK(BM_Cell600Clone);

static void BM_TriangleJewels(benchmark::State& state) {
  for (auto _ : state) {
    JewelCatalog cat = enumerate_triangle_jewels(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(cat.jewels.size());
  }
}
BENCHMARK(BM_TriangleJewels)->Arg(1)->Arg(4);

static void BM_SquareTriangleJewels(benchmark::State& state) {
  for (auto _ : state) {
    JewelCatalog cat = enumerate_square_triangle_jewels(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(cat.max_forced_tiles);
  }
}
BENCHMARK(BM_SquareTriangleJewels)->Arg(1)->Arg(4);

static void BM_CrossCensus(benchmark::State& state) {
  for (auto _ : state) {
    CrossGluingCensus census = enumerate_cross_simplex_compounds();
    benchmark::DoNotOptimize(census.total);
  }
}
BENCHMARK(BM_CrossCensus);

static void BM_SimplexCompounds(benchmark::State& state) {
  for (auto _ : state) {
    auto found = classify_simplex_compounds();
    benchmark::DoNotOptimize(found.size());
  }
}
BENCHMARK(BM_SimplexCompounds);

static void BM_BuildSgPrime(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CoverSurface S = build_sg_prime(g);
    benchmark::DoNotOptimize(S.cx.n_cells());
  }
}
BENCHMARK(BM_BuildSgPrime)->Arg(1)->Arg(3)->Arg(7);

static void BM_EnumerateLoops(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  CoverSurface S = build_sg_prime(g);
  for (auto _ : state) {
    auto loops = enumerate_obstructing_loops(S);
    benchmark::DoNotOptimize(loops.size());
  }
}
BENCHMARK(BM_EnumerateLoops)->Arg(1)->Arg(2)->Arg(3);

static void BM_BuildCover(benchmark::State& state) {
  CoverSurface S = build_sg_prime(1);
  const long long n = state.range(0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Cocycle z = random_cocycle(S, n, seed++);
    LiftedCover cover = build_cover(S, z);
    benchmark::DoNotOptimize(cover.cx.n_cells());
  }
}
BENCHMARK(BM_BuildCover)->Arg(16)->Arg(128)->Arg(512);

static void BM_LoopCriterion(benchmark::State& state) {
  CoverSurface S = build_sg_prime(2);
  auto loops = enumerate_obstructing_loops(S);
  Cocycle z = random_cocycle(S, 1 << 20, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(strongly_regular_via_loops(S, loops, z));
  }
}
BENCHMARK(BM_LoopCriterion);
