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

// The 2x+4y+2z-8 state tripartite family: a bipartite boundary family on
// (A, B) with C fixed at |1>, followed by one on (B, C) with A fixed at |2>.
// The second family lives in the primed bases
//   B': swap(|1>, |2>) and swap(|y-1>, |y>),   C': swap(|1>, |2>)
// which moves its support off the first family's support.

#include <memory>
#include <string>

#include "gnl/constructors/bipartite.hpp"
#include "gnl/plan.hpp"

namespace gnl {

inline OrderedBasis primed_basis_b(std::size_t y) {
  if (y < 4) throw DomainError("primed basis B' needs y >= 4 (the two swaps collide at y = 3)");
  return OrderedBasis::transpositions(y, {{0, 1}, {y - 2, y - 1}});
}

inline OrderedBasis primed_basis_c(std::size_t z) { return OrderedBasis::transpositions(z, {{0, 1}}); }

/// Block decomposition of the tripartite family. Its union is the family
/// itself; each block is a bipartite seed certifiable on its own.
inline CompositionPlan theorem3_plan(std::size_t x, std::size_t y, std::size_t z, const UflUnitary& X,
                                     const UflUnitary& Y, const UflUnitary& Z) {
  if (x < 3 || z < 3) {
    throw DomainError("theorem3: x and z must be >= 3; " + std::string(kQubitNecessityNote));
  }
  if (y < 4) {
    throw DomainError("theorem3: y = " + std::to_string(y) +
                      " rejected; the primed basis on B needs y >= 4");
  }
  const PartyDims dims{x, y, z};
  StateSet psi = build_theorem1(x, y, X, Y);
  psi.set_label("theorem3 psi family");
  StateSet phi = build_theorem1(y, z, Y, Z, primed_basis_b(y), primed_basis_c(z));
  phi.set_label("theorem3 phi family");

  CompositionPlan plan{dims, {}, "theorem3 x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                     " z=" + std::to_string(z)};
  plan.blocks.push_back({{0, 1}, std::move(psi), {{2, basis_vector(z, 0)}}, nullptr, std::nullopt});
  plan.blocks.push_back({{1, 2}, std::move(phi), {{0, basis_vector(x, 1)}}, nullptr, std::nullopt});
  return plan;
}

/// Psi family (2x+2y-4 states) then Phi family (2y+2z-4 states).
inline StateSet build_theorem3(std::size_t x, std::size_t y, std::size_t z, const UflUnitary& X,
                               const UflUnitary& Y, const UflUnitary& Z) {
  return place_blocks(theorem3_plan(x, y, z, X, Y, Z));
}

}  // namespace gnl
