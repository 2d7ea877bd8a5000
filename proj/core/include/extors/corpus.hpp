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

#pragma once

#include <random>

#include "extors/fp_module.hpp"

namespace extors {

/// Deterministic generator. Raw engine outputs with modulo sampling keep
/// seeded runs bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n) { return n ? engine_() % n : 0; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(hi - lo + 1));
  }
  bool chance(std::uint64_t num, std::uint64_t den) {
    return below(den) < num;
  }

 private:
  std::mt19937_64 engine_;
};

enum class CorpusProfile { torsion, mixed, free_module };

/// Sizes stay desk-scale: free ranks <= 3, relations <= 5, degrees <= 3.
Polynomial random_polynomial(Rng& rng, const RingPtr& ring, int max_degree,
                             int max_terms, bool ensure_nonzero);

/// Nonzero polynomial with a nonzero constant-free part avoided (so scalar
/// torsion is interesting); never a unit.
Polynomial random_nonunit(Rng& rng, const RingPtr& ring, int max_degree);

/// Deterministic module corpus. index selects the member; the same (seed,
/// profile, index) always yields the same presentation.
FPModule corpus_module(const RingPtr& ring, std::uint64_t seed,
                       CorpusProfile profile, std::size_t index);

std::vector<FPModule> corpus_generate(const RingPtr& ring, std::uint64_t seed,
                                      std::size_t count,
                                      CorpusProfile profile);

/// The rings the seeded suites run over.
RingPtr corpus_ring_univariate();
RingPtr corpus_ring_bivariate();

}  // namespace extors
