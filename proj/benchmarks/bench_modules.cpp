// Copyright 2026 The extors Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "extors/corpus.hpp"
#include "extors/ext1.hpp"

namespace {

using namespace extors;

void BM_syzygies(benchmark::State& state) {
  RingPtr ring = corpus_ring_bivariate();
  FPModule n = corpus_module(ring, 11, CorpusProfile::mixed, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(syzygies(n.presentation()));
}
BENCHMARK(BM_syzygies);

void BM_hom_module(benchmark::State& state) {
  RingPtr ring = corpus_ring_bivariate();
  FPModule n = corpus_module(ring, 11, CorpusProfile::torsion, 1);
  Rng rng(4);
  Polynomial f = random_nonunit(rng, ring, 2);
  FPModule target = FPModule::cyclic(ring, f);
  for (auto _ : state) benchmark::DoNotOptimize(HomModule(n, target));
}
BENCHMARK(BM_hom_module);

void BM_ext1_oracle(benchmark::State& state) {
  RingPtr ring = corpus_ring_bivariate();
  FPModule n = corpus_module(ring, 11, CorpusProfile::mixed,
                             static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Ext1Oracle(n));
}
BENCHMARK(BM_ext1_oracle)->Arg(0)->Arg(1)->Arg(2);

void BM_gcd_shortcut(benchmark::State& state) {
  RingPtr ring = corpus_ring_univariate();
  FPModule n = corpus_module(ring, 11, CorpusProfile::torsion, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ext1_via_gcd(n));
}
BENCHMARK(BM_gcd_shortcut);

}  // namespace
