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

#include "extors/report.hpp"

namespace extors {

/// Seeded verification suites over the module corpus. Suites:
///   gcd        — the Hom(N, A/aA) description of Ext^1 for torsion N
///   ext1na     — exactness around the connecting homomorphism, plus the
///                functoriality square for divisor pairs
///   hope       — Hom(N, A/fA) factors through the gcd(a, f) level
///   stab       — nonzero annihilator of Ext^1 and its stabilizing scalar
///   adjunction — restriction of scalars across N -> N/fN
///   all        — everything above
struct SuiteOptions {
  std::string suite = "all";
  std::size_t cases = 50;
  std::uint64_t seed = 7;
  int jobs = 1;
  long long budget_ms = 0;  // 0 = unlimited
  /// Testing aid: force the record at this index to FAIL (-1 = off).
  long long inject_failure = -1;
};

Report run_verification(const SuiteOptions& options);

bool is_known_suite(const std::string& name);

}  // namespace extors
