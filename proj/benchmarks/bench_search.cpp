// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "zerocycle/search.hpp"
#include "zerocycle/surface.hpp"

namespace {

using namespace zc;

FieldPtr rational_field() {
  return NumberField::create(UniPoly({Rat(0), Rat(1)}));
}

FieldPtr cubic_field() {
  return NumberField::create(UniPoly({Rat(1), Rat(1), Rat(0), Rat(1)}));
}

void BM_EnumerateElements(benchmark::State& state) {
  auto F = cubic_field();
  SearchBounds bounds{state.range(0), 2};
  for (auto _ : state) {
    auto stream = enumerate_elements(F, bounds);
    benchmark::DoNotOptimize(stream);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(enumerate_elements(F, bounds).size()));
}
BENCHMARK(BM_EnumerateElements)->Arg(2)->Arg(4);

void BM_SurfaceSearchRational(benchmark::State& state) {
  auto Q = rational_field();
  BiellipticSurface S = BiellipticSurface::standard(Q);
  SearchBounds bounds{state.range(0), 1};
  SearchOptions opt;
  std::uint64_t pairs = 0;
  for (auto _ : state) {
    SearchReport r = search_surface(S, Q, bounds, opt);
    pairs = r.candidates_tested;
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pairs));
}
BENCHMARK(BM_SurfaceSearchRational)->Arg(10)->Arg(30);

void BM_QuarticSearchCubic(benchmark::State& state) {
  auto L = cubic_field();
  BiellipticSurface S = BiellipticSurface::standard(L);
  QuarticTwistCurve C =
      make_quartic_twist(L, L->element({Rat(9), Rat(-4), Rat(6)}), S.g);
  SearchBounds bounds{state.range(0), 1};
  SearchOptions opt;
  std::uint64_t n = 0;
  for (auto _ : state) {
    SearchReport r = search_quartic(C, bounds, opt);
    n = r.candidates_tested;
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_QuarticSearchCubic)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
