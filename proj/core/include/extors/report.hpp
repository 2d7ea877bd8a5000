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

#include <cstdint>
#include <string>
#include <vector>

namespace extors {

struct CaseRecord {
  std::string case_id;
  std::string ref;      // tag of the property checked
  bool pass = false;
  long long millis = 0;  // wall clock, text format only
  std::uint64_t seed = 0;
  std::string detail;    // free-form, text format only
};

struct Report {
  std::vector<CaseRecord> records;
  bool aborted = false;  // budget exceeded before completion

  bool all_pass() const {
    if (aborted) return false;
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : records)
      if (!r.pass) ++n;
    return n;
  }
};

enum class ReportFormat { text, records };

/// Machine-readable line format: "case=... ref=... status=... millis=0
/// seed=...". The millis field is pinned to 0 so identical runs are
/// byte-identical; wall-clock timings appear in the text format only.
std::string format_records(const Report& report);

/// Human-readable variant with timings and details.
std::string format_text(const Report& report);

std::string format_report(const Report& report, ReportFormat format);

}  // namespace extors
