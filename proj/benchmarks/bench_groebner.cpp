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
#include "extors/ideal.hpp"
#include "extors/text_io.hpp"

namespace {

using namespace extors;

void BM_groebner_random(benchmark::State& state) {
  RingPtr ring = corpus_ring_bivariate();
  Rng rng(1);
  std::vector<std::vector<Polynomial>> inputs;
  for (int t = 0; t < 16; ++t) {
    std::vector<Polynomial> gens;
    for (long long i = 0; i < state.range(0); ++i)
      gens.push_back(random_polynomial(rng, ring, 3, 4, true));
    inputs.push_back(std::move(gens));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner(ring, inputs[i % inputs.size()]));
    ++i;
  }
}
BENCHMARK(BM_groebner_random)->Arg(2)->Arg(3)->Arg(4);

void BM_groebner_cyclic_pair(benchmark::State& state) {
  RingPtr ring = parse_ring("ring QQ[x,y,z] order grevlex");
  std::vector<Polynomial> gens = {
      parse_polynomial(ring, "x*y-z^2"),
      parse_polynomial(ring, "y*z-x^2"),
      parse_polynomial(ring, "z*x-y^2"),
  };
  for (auto _ : state) benchmark::DoNotOptimize(groebner(ring, gens));
}
BENCHMARK(BM_groebner_cyclic_pair);

void BM_ideal_intersection(benchmark::State& state) {
  RingPtr ring = corpus_ring_bivariate();
  Rng rng(2);
  Ideal a(ring, {random_nonunit(rng, ring, 3), random_nonunit(rng, ring, 2)});
  Ideal b(ring, {random_nonunit(rng, ring, 3)});
  for (auto _ : state) benchmark::DoNotOptimize(ideal_intersection(a, b));
}
BENCHMARK(BM_ideal_intersection);

void BM_gcd_poly(benchmark::State& state) {
  RingPtr ring = corpus_ring_bivariate();
  Rng rng(3);
  Polynomial common = random_nonunit(rng, ring, 2);
  Polynomial f = common * random_nonunit(rng, ring, 2);
  Polynomial g = common * random_nonunit(rng, ring, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd_poly(f, g));
}
BENCHMARK(BM_gcd_poly);

}  // namespace
