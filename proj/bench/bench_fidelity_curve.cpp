// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernel for the fidelity-versus-time sweep.

#include <benchmark/benchmark.h>

#include "qchain/sweeps.hpp"
#include "qchain/transfer.hpp"

namespace {

const qchain::TransferModel& model_for(int sites) {
  static const qchain::TransferModel small(
      qchain::EncodingSpec{3, 6, qchain::Deformation::real(1.2)});
  static const qchain::TransferModel paper(
      qchain::EncodingSpec{3, 10, qchain::Deformation::real(1.2)});
  return sites <= 6 ? small : paper;
}

void BM_CurveSerial(benchmark::State& state) {
  const auto& model = model_for(static_cast<int>(state.range(0)));
  const auto times = qchain::TimeGrid{}.points();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qchain::transfer_curve_serial(model, times));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(times.size()));
}

void BM_CurveOpenMP(benchmark::State& state) {
  const auto& model = model_for(static_cast<int>(state.range(0)));
  const auto times = qchain::TimeGrid{}.points();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qchain::transfer_curve(model, times));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(times.size()));
}

}  // namespace

BENCHMARK(BM_CurveSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CurveOpenMP)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
