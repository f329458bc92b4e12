// Copyright 2026 The chenbound Authors
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

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace chenbound {

struct Violation {
  std::string witness;
  std::string lhs;
  std::string rhs;
  double margin = 0.0;
};

// Outcome of one empirical scan. worst_margin is +inf when nothing was
// checked; violations is empty exactly when worst_margin >= 0.
struct VerificationReport {
  std::string check_id;
  std::string range_lo;
  std::string range_hi;
  std::uint64_t points_checked = 0;
  std::vector<Violation> violations;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string worst_witness;
  // Set when the scanned range lies outside the hypothesis of the statement
  // being probed; violations are then observations, not failures.
  bool informational = false;
  std::string notes;

  bool passed() const { return informational || violations.empty(); }

  // Records a checked point. Keeps at most `keep` violations in full.
  void record(const std::string& witness, double margin, const std::string& lhs,
              const std::string& rhs, bool violated, std::size_t keep = 1000);
};

}  // namespace chenbound
