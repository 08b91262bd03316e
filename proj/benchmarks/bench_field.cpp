// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "zerocycle/numberfield.hpp"
#include "zerocycle/squares.hpp"

namespace {

using namespace zc;

FieldPtr cubic_field() {
  return NumberField::create(UniPoly({Rat(1), Rat(1), Rat(0), Rat(1)}));
}

void BM_FieldMul(benchmark::State& state) {
  auto F = cubic_field();
  const FieldElement a = F->element({Rat(9), Rat(-4), Rat(6)});
  const FieldElement b = F->element({Rat(4851), Rat(-2133), Rat(3357)});
  for (auto _ : state) {
    FieldElement c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_FieldMul);

void BM_FieldInv(benchmark::State& state) {
  auto F = cubic_field();
  const FieldElement a = F->element({Rat(9), Rat(-4), Rat(6)});
  for (auto _ : state) {
    FieldElement c = a.inv();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_FieldInv);

void BM_FieldNorm(benchmark::State& state) {
  auto F = cubic_field();
  const FieldElement a = F->element({Rat(4851), Rat(-2133), Rat(3357)});
  for (auto _ : state) {
    Rat n = a.norm();
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_FieldNorm);

void BM_SqrtOfSquare(benchmark::State& state) {
  auto F = cubic_field();
  const FieldElement w = F->element({Rat(1), Rat(-1), Rat(1)});
  const FieldElement sq = w * w;
  for (auto _ : state) {
    FieldElement r = fe_sqrt(sq);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SqrtOfSquare);

void BM_IsSquareReject(benchmark::State& state) {
  auto F = cubic_field();
  const FieldElement theta = F->generator();
  for (auto _ : state) {
    SquareResult r = fe_is_square(theta);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_IsSquareReject);

}  // namespace

BENCHMARK_MAIN();
