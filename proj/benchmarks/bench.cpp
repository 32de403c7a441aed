/*
 * Copyright 2026 The weilcodes authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "weilcodes/charsum.hpp"
#include "weilcodes/codes.hpp"
#include "weilcodes/field.hpp"
#include "weilcodes/predict.hpp"

namespace {

using namespace weilcodes;

const FieldTable& field_531() {
  static const FieldTable f = build_field(validate_params(5, 3, 1));
  return f;
}

const FieldTable& field_751() {
  static const FieldTable f = build_field(validate_params(7, 5, 1));
  return f;
}

void BM_FieldBuild(benchmark::State& state) {
  const FieldParams params = validate_params(3, 5, 1);
  for (auto _ : state) {
    FieldTable f = build_field(params);
    benchmark::DoNotOptimize(f.q());
  }
}
BENCHMARK(BM_FieldBuild);

void BM_FieldMul(benchmark::State& state) {
  const FieldTable& f = field_751();
  const FieldElement a = f.from_log(12345), b = f.from_log(671);
  for (auto _ : state) benchmark::DoNotOptimize(f.mul(a, b).lg);
}
BENCHMARK(BM_FieldMul);

void BM_FieldAdd(benchmark::State& state) {
  const FieldTable& f = field_751();
  const FieldElement a = f.from_log(12345), b = f.from_log(671);
  for (auto _ : state) benchmark::DoNotOptimize(f.add(a, b).lg);
}
BENCHMARK(BM_FieldAdd);

void BM_WeilBrute(benchmark::State& state) {
  const FieldTable& f = field_751();
  const FieldElement a = f.from_residue(3), b = f.from_log(5);
  for (auto _ : state) {
    CycInt s = weil_sum_bruteforce(f, a, b);
    benchmark::DoNotOptimize(s.coeffs().data());
  }
}
BENCHMARK(BM_WeilBrute);

void BM_WeilClosed(benchmark::State& state) {
  const FieldTable& f = field_751();
  static const PartitionTables part = build_partition(f);
  const FieldElement b = f.from_log(5);
  for (auto _ : state) {
    CycInt s = weil_sum_closed(f, part, 3, b);
    benchmark::DoNotOptimize(s.coeffs().data());
  }
}
BENCHMARK(BM_WeilClosed);

void BM_ZeroCountClosed(benchmark::State& state) {
  const FieldTable& f = field_531();
  static const PartitionTables part = build_partition(f);
  const CodeSpec spec = CodeSpec::du(*f.params(), 1);
  const FieldElement gamma = f.from_residue(2), delta = f.from_log(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(zero_count_closed(spec, f, part, gamma, delta));
}
BENCHMARK(BM_ZeroCountClosed);

void BM_SpectrumDirect(benchmark::State& state) {
  const FieldTable& f = field_531();
  static const PartitionTables part = build_partition(f);
  const CodeSpec spec = CodeSpec::du(*f.params(), 0);
  for (auto _ : state) {
    WeightDistribution d = weight_distribution(spec, f, part, Method::Direct);
    benchmark::DoNotOptimize(d.d_min);
  }
}
BENCHMARK(BM_SpectrumDirect);

void BM_SpectrumClosed(benchmark::State& state) {
  const FieldTable& f = field_751();
  static const PartitionTables part = build_partition(f);
  const CodeSpec spec = CodeSpec::du(*f.params(), 2);
  for (auto _ : state) {
    WeightDistribution d = weight_distribution(spec, f, part, Method::Closed);
    benchmark::DoNotOptimize(d.d_min);
  }
}
BENCHMARK(BM_SpectrumClosed);

void BM_Predict(benchmark::State& state) {
  const FieldTable& f = field_751();
  const CodeSpec spec = CodeSpec::du(*f.params(), 2);
  for (auto _ : state) {
    Prediction pred = predict_distribution(spec);
    benchmark::DoNotOptimize(pred.dist.d_min);
  }
}
BENCHMARK(BM_Predict);

}  // namespace

BENCHMARK_MAIN();
