// SPDX-License-Identifier: Apache-2.0
//
// irs-secrecy: secure downlink simulation with an intelligent reflecting surface
// Copyright (C) 2026 The irs-secrecy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// OpenMP kernels against their serial twins.

#include <benchmark/benchmark.h>

#include <vector>

#include "irs/altopt.hpp"
#include "irs/irsopt.hpp"
#include "irs/kernels.hpp"
#include "irs/rng.hpp"
#include "irs/txbf.hpp"

namespace {

using irs::kernels::Matrix;

Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
  irs::Rng rng(seed);
  Matrix m(rows, cols);
  for (double& v : m.data) v = rng.normal();
  return m;
}

struct DenseFixture {
  Matrix x = random_matrix(256, 317, 1);
  Matrix w = random_matrix(317, 256, 2);
  std::vector<double> b = std::vector<double>(256, 0.1);
  Matrix dy = random_matrix(256, 256, 3);
};

template <bool Parallel>
void BM_DenseForward(benchmark::State& state) {
  DenseFixture f;
  Matrix y(f.x.rows, f.w.cols);
  for (auto _ : state) {
    if constexpr (Parallel) irs::kernels::dense_forward(f.x, f.w, f.b, y);
    else irs::kernels::serial::dense_forward(f.x, f.w, f.b, y);
    benchmark::DoNotOptimize(y.data.data());
  }
}

template <bool Parallel>
void BM_DenseBackward(benchmark::State& state) {
  DenseFixture f;
  Matrix dx(f.x.rows, f.x.cols);
  Matrix dw(f.w.rows, f.w.cols);
  std::vector<double> db(static_cast<std::size_t>(f.w.cols));
  for (auto _ : state) {
    if constexpr (Parallel) {
      irs::kernels::dense_backward_input(f.dy, f.w, dx);
      irs::kernels::dense_backward_params(f.x, f.dy, dw, db);
    } else {
      irs::kernels::serial::dense_backward_input(f.dy, f.w, dx);
      irs::kernels::serial::dense_backward_params(f.x, f.dy, dw, db);
    }
    benchmark::DoNotOptimize(dw.data.data());
  }
}

struct PhaseFixture {
  irs::SystemParams params = irs::SystemParams::defaults();
  irs::FractionalQuadratic fq;
  std::vector<irs::CVector> candidates;

  PhaseFixture() {
    irs::Rng rng(7);
    const irs::ChannelSet ch = irs::sample_channels(params, rng);
    const irs::AltOptResult base = irs::baseline_no_irs(ch, params);
    fq = irs::build_fractional(ch, base.f.f, params);
    const irs::LiftedSolution sol = irs::solve_relaxation(fq);
    candidates = irs::randomization_candidates(sol.V, 500, rng);
  }
};

template <bool Parallel>
void BM_RandomizationScoring(benchmark::State& state) {
  PhaseFixture f;
  std::vector<double> values(f.candidates.size());
  const auto score = [&](std::size_t i) { return f.fq.objective(f.candidates[i]); };
  for (auto _ : state) {
    if constexpr (Parallel) irs::kernels::evaluate_all(values.size(), values, score);
    else irs::kernels::serial::evaluate_all(values.size(), values, score);
    benchmark::DoNotOptimize(irs::kernels::first_argmax(values));
  }
}

template <bool Parallel>
void BM_RealizationMap(benchmark::State& state) {
  const irs::SystemParams params = irs::SystemParams::defaults();
  const auto one = [&](std::size_t i) {
    irs::Rng rng(100 + i);
    return irs::baseline_no_irs(irs::sample_channels(params, rng), params).rate.secrecy;
  };
  for (auto _ : state) {
    std::vector<double> out = Parallel ? irs::kernels::map_indexed<double>(256, one)
                                       : irs::kernels::serial::map_indexed<double>(256, one);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_DenseForward<true>)->Name("dense_forward/parallel");
BENCHMARK(BM_DenseForward<false>)->Name("dense_forward/serial");
BENCHMARK(BM_DenseBackward<true>)->Name("dense_backward/parallel");
BENCHMARK(BM_DenseBackward<false>)->Name("dense_backward/serial");
BENCHMARK(BM_RandomizationScoring<true>)->Name("randomization_scoring/parallel");
BENCHMARK(BM_RandomizationScoring<false>)->Name("randomization_scoring/serial");
BENCHMARK(BM_RealizationMap<true>)->Name("realization_map/parallel");
BENCHMARK(BM_RealizationMap<false>)->Name("realization_map/serial");

BENCHMARK_MAIN();
