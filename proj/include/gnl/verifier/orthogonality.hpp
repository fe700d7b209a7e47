// Copyright 2026 The gnl Authors
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

#include <cmath>
#include <vector>

#include "gnl/numerics.hpp"
#include "gnl/states.hpp"

namespace gnl {

struct OverlapPair {
  std::size_t first;
  std::size_t second;
  double overlap;
};

struct OrthogonalityAudit {
  std::size_t pairs_checked = 0;
  double max_overlap = 0.0;
  std::vector<OverlapPair> offending;  // |<i|j>| > tol, ordered by (first, second)

  bool pass() const { return offending.empty(); }
};

/// Every pair of states, overlaps computed factor by factor.
inline OrthogonalityAudit check_orthogonality(const StateSet& set, double tol = kDefaultTol) {
  OrthogonalityAudit audit;
  const auto& states = set.states();
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const double ov = std::abs(inner_product(states[i], states[j]));
      ++audit.pairs_checked;
      audit.max_overlap = std::max(audit.max_overlap, ov);
      if (ov > tol) audit.offending.push_back({i, j, ov});
    }
  }
  return audit;
}

}  // namespace gnl
