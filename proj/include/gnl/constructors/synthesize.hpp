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

// Picks a construction for arbitrary local dimensions (all >= 3):
//   L = 2              -> bipartite boundary family
//   L = 3, max dim > 3 -> tripartite family with the largest dim on party B
//   L = 3, all dims 3  -> needs an externally supplied 3x3x3 seed
//   L >= 4             -> star composition of bipartite seeds

#include <algorithm>
#include <optional>
#include <variant>

#include "gnl/constructors/bipartite.hpp"
#include "gnl/constructors/compose.hpp"
#include "gnl/constructors/tripartite.hpp"
#include "gnl/constructors/ufl.hpp"

namespace gnl {

struct Synthesized {
  StateSet set;
  /// Absent for L = 2, where the set is certified directly.
  std::optional<CompositionPlan> plan;
  std::string construction;
};

struct NeedsExternalSeed {
  std::string reason;
};

using SynthesisResult = std::variant<Synthesized, NeedsExternalSeed>;

struct SynthesisOptions {
  UnitarySource unitaries = UnitarySource::parse("fourier");
  double ufl_floor = kUflFloor;
};

inline SynthesisResult synthesize(const PartyDims& dims, const SynthesisOptions& options = {}) {
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (dims[p] <= 2) {
      throw DomainError("synthesize: party " + std::to_string(p + 1) + " has dim " + std::to_string(dims[p]) +
                        "; " + kQubitNecessityNote);
    }
  }
  std::uint64_t draws = 0;
  auto draw = [&](std::size_t n) { return options.unitaries.draw(n, draws++, options.ufl_floor); };

  const std::size_t L = dims.size();
  if (L == 2) {
    const UflUnitary X = draw(dims[0] - 1);
    const UflUnitary Y = draw(dims[1] - 1);
    return Synthesized{build_theorem1(dims[0], dims[1], X, Y), std::nullopt, "theorem1"};
  }
  if (L == 3) {
    const auto largest = std::max_element(dims.begin(), dims.end());
    if (*largest == 3) {
      return NeedsExternalSeed{
          "all-qutrit tripartite system: the tripartite family needs a party of dim >= 4; supply an "
          "externally constructed genuinely nonlocal 3x3x3 set"};
    }
    const std::size_t b = static_cast<std::size_t>(largest - dims.begin());
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < 3; ++p) {
      if (p != b) rest.push_back(p);
    }
    // Construction order (A, B, C) = (rest[0], b, rest[1]); `order` maps caller
    // party q to the construction party that sits there.
    std::vector<std::size_t> order(3);
    order[rest[0]] = 0;
    order[b] = 1;
    order[rest[1]] = 2;
    const std::size_t x = dims[rest[0]];
    const std::size_t y = dims[b];
    const std::size_t z = dims[rest[1]];
    const UflUnitary X = draw(x - 1);
    const UflUnitary Y = draw(y - 1);
    const UflUnitary Z = draw(z - 1);
    CompositionPlan plan = permute_plan(theorem3_plan(x, y, z, X, Y, Z), order);
    plan.label = "theorem3 x=" + std::to_string(x) + " y=" + std::to_string(y) + " z=" + std::to_string(z) +
                 " in caller party order " + to_string(dims);
    StateSet set = place_blocks(plan);
    return Synthesized{std::move(set), std::move(plan), "theorem3"};
  }
  std::vector<StateSet> seeds;
  for (std::size_t i = 1; i < L; ++i) {
    const UflUnitary X = draw(dims[0] - 1);
    const UflUnitary Y = draw(dims[i] - 1);
    seeds.push_back(build_theorem1(dims[0], dims[i], X, Y));
  }
  CompositionPlan plan = star_plan(dims, seeds);
  StateSet set = place_blocks(plan);
  return Synthesized{std::move(set), std::move(plan), "star"};
}

}  // namespace gnl
