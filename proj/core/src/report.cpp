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

#include "extors/report.hpp"

#include <sstream>

namespace extors {

std::string format_records(const Report& report) {
  std::ostringstream out;
  for (const auto& r : report.records)
    out << "case=" << r.case_id << " ref=" << r.ref
        << " status=" << (r.pass ? "PASS" : "FAIL") << " millis=0"
        << " seed=" << r.seed << "\n";
  return out.str();
}

std::string format_text(const Report& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : report.records) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.case_id << "  [" << r.ref
        << "]  " << r.millis << " ms  seed=" << r.seed;
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
    if (r.pass) ++passed;
  }
  out << passed << "/" << report.records.size() << " checks passed";
  if (report.aborted) out << " (aborted: budget exceeded)";
  out << "\n";
  return out.str();
}

std::string format_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::records ? format_records(report)
                                         : format_text(report);
}

}  // namespace extors
