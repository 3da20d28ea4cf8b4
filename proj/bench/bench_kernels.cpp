// Serial reference against the OpenMP kernels.  Each benchmark takes the
// parallel switch as its argument: 0 runs the serial path, 1 the parallel one.
#include <benchmark/benchmark.h>

#include <random>

#include "lefschetz/builders.hpp"
#include "lefschetz/curve_library.hpp"
#include "lefschetz/hurwitz.hpp"
#include "lefschetz/sections.hpp"

using namespace lefschetz;

namespace {

// A 10-letter word and a copy scrambled by six elementary transformations.
std::pair<PositiveFactorization, PositiveFactorization> scrambled_pair() {
  std::mt19937_64 rng(11);
  const auto& L = library(2);
  PositiveFactorization F;
  F.genus = 2;
  for (int i = 0; i < 10; ++i) F.letters.push_back(L.chain(1 + static_cast<int>(rng() % 5)));
  auto G = F;
  for (int m = 0; m < 6; ++m)
    G = elementary_transformation(G, 1 + rng() % (F.size() - 1), rng() % 2 ? 1 : -1);
  return {F, G};
}

void BM_hurwitz_search(benchmark::State& state) {
  const auto [F, G] = scrambled_pair();
  HurwitzOptions opt;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_search(F, G, opt));
}
BENCHMARK(BM_hurwitz_search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_group_separation(benchmark::State& state) {
  const auto& L = library(2);
  const auto D = extract_seed_pointpush(L.chain(4), L.gamma(), 5);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(group_separation_invariant(D, 4, parallel));
}
BENCHMARK(BM_group_separation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_sigma_k(benchmark::State& state) {
  const auto S = make_sectioned(build_indecomposable_example(3));
  const auto H = standard_hypothesis(3, S.split_index);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_sigma_k(S, H, 3, parallel));
}
BENCHMARK(BM_sigma_k)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
