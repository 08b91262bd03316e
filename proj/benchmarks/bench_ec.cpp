// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "zerocycle/curves.hpp"
#include "zerocycle/numberfield.hpp"

namespace {

using namespace zc;

struct Setup {
  FieldPtr F;
  WeierstrassCurve E;
  ECPoint G;

  Setup()
      : F(NumberField::create(UniPoly({Rat(1), Rat(1), Rat(0), Rat(1)}))),
        E(WeierstrassCurve::create(F, F->from_int(-6), F->one(), F->zero())),
        G(ECPoint::affine(F->element({Rat(9), Rat(-4), Rat(6)}),
                          F->element({Rat(26), Rat(-12), Rat(18)}))) {}
};

void BM_EcAdd(benchmark::State& state) {
  Setup s;
  const ECPoint G2 = ec_mul(s.E, 2, s.G);
  for (auto _ : state) {
    ECPoint R = ec_add(s.E, s.G, G2);
    benchmark::DoNotOptimize(R);
  }
}
BENCHMARK(BM_EcAdd);

void BM_EcDouble(benchmark::State& state) {
  Setup s;
  for (auto _ : state) {
    ECPoint R = ec_add(s.E, s.G, s.G);
    benchmark::DoNotOptimize(R);
  }
}
BENCHMARK(BM_EcDouble);

void BM_EcMul(benchmark::State& state) {
  Setup s;
  const long n = state.range(0);
  for (auto _ : state) {
    ECPoint R = ec_mul(s.E, n, s.G);
    benchmark::DoNotOptimize(R);
  }
}
BENCHMARK(BM_EcMul)->Arg(2)->Arg(5)->Arg(9);

void BM_DeltaPhi(benchmark::State& state) {
  Setup s;
  for (auto _ : state) {
    FieldElement d = delta_phi(s.E, s.G);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DeltaPhi);

}  // namespace

BENCHMARK_MAIN();
