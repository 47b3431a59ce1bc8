/* Copyright 2026 the finsite authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include "finsite/fixtures.hpp"
#include "finsite/oracle.hpp"
#include "finsite/reduct.hpp"

namespace {

using namespace finsite;

const char* kCorpus[] = {"WALK", "SPAN", "COSPAN", "Z2",
                         "M2",   "TERM", "DISC2",  "PAIR"};

void BM_ValidateCategory(benchmark::State& state) {
  const CategoryPtr cat = fixture_category(kCorpus[state.range(0)]);
  const CategoryDescription d = cat->description();
  for (auto _ : state)
    benchmark::DoNotOptimize(FiniteCategory::validate(d));
}
BENCHMARK(BM_ValidateCategory)->DenseRange(0, 7);

void BM_EnumerateSieves(benchmark::State& state) {
  const CategoryPtr cat = fixture_category("COSPAN");
  const ObjId c = *cat->find_object("c");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sieves(cat, c));
}
BENCHMARK(BM_EnumerateSieves);

void BM_DenseTopology(benchmark::State& state) {
  const CategoryPtr cat = fixture_category(kCorpus[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(dense_topology(cat));
}
BENCHMARK(BM_DenseTopology)->DenseRange(0, 7);

void BM_DeMorganTopology(benchmark::State& state) {
  const CategoryPtr cat = fixture_category("COSPAN");
  for (auto _ : state) benchmark::DoNotOptimize(de_morgan_topology(cat));
}
BENCHMARK(BM_DeMorganTopology);

void BM_EnumerateTopologies(benchmark::State& state) {
  const CategoryPtr cat = fixture_category("COSPAN");
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_topologies(cat, 16));
}
BENCHMARK(BM_EnumerateTopologies);

void BM_Booleanization(benchmark::State& state) {
  const CategoryPtr cat = fixture_category("COSPAN");
  const GrothendieckTopology j = trivial_topology(cat);
  for (auto _ : state) benchmark::DoNotOptimize(booleanization(j));
}
BENCHMARK(BM_Booleanization);

void BM_AnalyzeSite(benchmark::State& state) {
  const CategoryPtr cat = fixture_category(kCorpus[state.range(0)]);
  const GrothendieckTopology j = trivial_topology(cat);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_site(j));
}
BENCHMARK(BM_AnalyzeSite)->DenseRange(0, 7);

void BM_OracleSuite(benchmark::State& state) {
  const CategoryPtr cat = fixture_category("WALK");
  for (auto _ : state) benchmark::DoNotOptimize(run_oracle(cat));
}
BENCHMARK(BM_OracleSuite);

}  // namespace

BENCHMARK_MAIN();
