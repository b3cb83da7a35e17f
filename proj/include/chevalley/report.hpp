// Copyright 2026 The Chevalley Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace chevalley {

struct Violation {
  std::string where;
  std::string expected;
  std::string got;
};

/// Outcome of one verification suite. Passes iff no violations were recorded.
struct VerificationReport {
  VerificationReport() = default;
  explicit VerificationReport(std::string name) : suite(std::move(name)) {}

  std::string suite;
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }

  void fail(std::string where, std::string expected, std::string got) {
    // Keep reports bounded; the count of checks still reflects the sweep.
    if (violations.size() < kMaxViolations) {
      violations.push_back({std::move(where), std::move(expected), std::move(got)});
    } else {
      truncated = true;
    }
  }

  void merge(const VerificationReport& other) {
    checked += other.checked;
    for (const auto& v : other.violations) fail(v.where, v.expected, v.got);
    truncated = truncated || other.truncated;
  }

  static constexpr std::size_t kMaxViolations = 1000;
  bool truncated = false;
};

inline std::ostream& operator<<(std::ostream& os, const VerificationReport& r) {
  os << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checked << " checked, "
     << r.violations.size() << (r.truncated ? "+" : "") << " violations)";
  for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) {
    const auto& v = r.violations[i];
    os << "\n  " << v.where << ": expected " << v.expected << ", got " << v.got;
  }
  return os;
}

}  // namespace chevalley
