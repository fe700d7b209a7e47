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

// Composers that turn lower-party seeds into sets on more parties: the star,
// chain and tri-star filler patterns, and the general plan composer.
//
// Filler notation below: |1> and |2> are the first and second computational
// basis vectors of a party; parties are numbered from 1 in comments and error
// messages, from 0 in code.

#include <string>
#include <vector>

#include "gnl/errors.hpp"
#include "gnl/partition_graph.hpp"
#include "gnl/plan.hpp"
#include "gnl/states.hpp"
#include "gnl/verifier/orthogonality.hpp"

namespace gnl {

namespace detail {

inline void require_min_dim(const PartyDims& dims, const char* who) {
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (dims[p] < 3) {
      throw DomainError(std::string(who) + ": party " + std::to_string(p + 1) + " has dim " +
                        std::to_string(dims[p]) + "; every party needs dimension >= 3");
    }
  }
}

/// Padding for every party outside `parties`: |2> on `second_slots`, |1> elsewhere.
inline std::map<std::size_t, ComplexVector> filler(const PartyDims& dims, const std::vector<std::size_t>& parties,
                                                   const std::vector<std::size_t>& second_slots) {
  std::map<std::size_t, ComplexVector> pad;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (std::find(parties.begin(), parties.end(), p) != parties.end()) continue;
    const bool second = std::find(second_slots.begin(), second_slots.end(), p) != second_slots.end();
    pad.emplace(p, basis_vector(dims[p], second ? 1 : 0));
  }
  return pad;
}

inline void require_seed_dims(const StateSet& seed, const std::vector<std::size_t>& parties, const PartyDims& dims,
                              const std::string& who) {
  if (seed.parties() != parties.size()) {
    throw InputError(who + ": seed has " + std::to_string(seed.parties()) + " parties, expected " +
                     std::to_string(parties.size()));
  }
  for (std::size_t t = 0; t < parties.size(); ++t) {
    if (seed.dims()[t] != dims[parties[t]]) {
      throw InputError(who + ": seed dims " + to_string(seed.dims()) + " do not match parties " +
                       party_list(parties));
    }
  }
}

}  // namespace detail

/// Star pattern: block i (1..L-1) puts the seed on parties (1, i+1), |2> on
/// party i for i >= 2 (party L for block 1), |1> elsewhere.
inline CompositionPlan star_plan(const PartyDims& dims, const std::vector<StateSet>& seeds) {
  const std::size_t L = dims.size();
  if (L < 4) throw DomainError("star composition needs L >= 4 parties, got " + std::to_string(L));
  detail::require_min_dim(dims, "star composition");
  if (seeds.size() != L - 1) {
    throw InputError("star composition: expected " + std::to_string(L - 1) + " seeds, got " +
                     std::to_string(seeds.size()));
  }
  CompositionPlan plan{dims, {}, "star L=" + std::to_string(L)};
  for (std::size_t b = 0; b + 1 < L; ++b) {
    const std::vector<std::size_t> parties{0, b + 1};
    detail::require_seed_dims(seeds[b], parties, dims, "star composition seed " + std::to_string(b + 1));
    const std::size_t second = b == 0 ? L - 1 : b;
    plan.blocks.push_back({parties, seeds[b], detail::filler(dims, parties, {second}), nullptr, std::nullopt});
  }
  return plan;
}

/// Chain pattern: block i (1..L-1) puts the seed on parties (i, i+1), |2> on
/// party i+2 (party 1 for block L-1), |1> elsewhere.
inline CompositionPlan chain_plan(const PartyDims& dims, const std::vector<StateSet>& seeds) {
  const std::size_t L = dims.size();
  if (L < 5) {
    throw DomainError("chain composition needs L >= 5 parties (structural zeros fail below), got " +
                      std::to_string(L));
  }
  detail::require_min_dim(dims, "chain composition");
  if (seeds.size() != L - 1) {
    throw InputError("chain composition: expected " + std::to_string(L - 1) + " seeds, got " +
                     std::to_string(seeds.size()));
  }
  CompositionPlan plan{dims, {}, "chain L=" + std::to_string(L)};
  for (std::size_t b = 0; b + 1 < L; ++b) {
    const std::vector<std::size_t> parties{b, b + 1};
    detail::require_seed_dims(seeds[b], parties, dims, "chain composition seed " + std::to_string(b + 1));
    const std::size_t second = b + 2 < L ? b + 2 : 0;
    plan.blocks.push_back({parties, seeds[b], detail::filler(dims, parties, {second}), nullptr, std::nullopt});
  }
  return plan;
}

/// Tri-star pattern over 2L+1 parties: block i (1..L) puts the tripartite seed
/// on parties (1, 2i, 2i+1), |2>|2> on parties (2i-2, 2i-1) for i >= 2 (the
/// last two parties for block 1), |1> elsewhere. `seed_plan`, when given, is
/// attached to every block so the seed can be certified by composition.
inline CompositionPlan tristar_plan(std::size_t L, const StateSet& seed, const PartyDims& dims,
                                    std::shared_ptr<const CompositionPlan> seed_plan = nullptr) {
  if (L < 3) throw DomainError("tri-star composition needs L >= 3 blocks, got " + std::to_string(L));
  if (dims.size() != 2 * L + 1) {
    throw InputError("tri-star composition: expected " + std::to_string(2 * L + 1) + " parties, got " +
                     std::to_string(dims.size()));
  }
  if (seed.parties() != 3) throw InputError("tri-star composition: seed must be tripartite");
  detail::require_min_dim(dims, "tri-star composition");
  CompositionPlan plan{dims, {}, "tristar L=" + std::to_string(L)};
  for (std::size_t i = 1; i <= L; ++i) {
    const std::vector<std::size_t> parties{0, 2 * i - 1, 2 * i};
    detail::require_seed_dims(seed, parties, dims, "tri-star composition block " + std::to_string(i));
    const std::vector<std::size_t> seconds =
        i == 1 ? std::vector<std::size_t>{2 * L - 1, 2 * L} : std::vector<std::size_t>{2 * i - 3, 2 * i - 2};
    plan.blocks.push_back({parties, seed, detail::filler(dims, parties, seconds), seed_plan, std::nullopt});
  }
  return plan;
}

inline StateSet compose_star(const PartyDims& dims, const std::vector<StateSet>& seeds) {
  return place_blocks(star_plan(dims, seeds));
}

inline StateSet compose_chain(const PartyDims& dims, const std::vector<StateSet>& seeds) {
  return place_blocks(chain_plan(dims, seeds));
}

inline StateSet compose_tristar(std::size_t L, const StateSet& seed, const PartyDims& dims) {
  return place_blocks(tristar_plan(L, seed, dims));
}

/// Union of the plan's blocks after checking that the composition graph is
/// connected and the union is pairwise orthogonal within `tol`.
inline StateSet compose_general(const CompositionPlan& plan, double tol = kDefaultTol) {
  validate_plan(plan);
  const auto comps = components(build_graph(plan));
  if (comps.size() > 1) {
    throw PlanError("composition graph is disconnected: components " + party_list(comps[0]) + " and " +
                    party_list(comps[1]));
  }
  StateSet out = place_blocks(plan);
  const OrthogonalityAudit audit = check_orthogonality(out, tol);
  if (!audit.pass()) {
    const OverlapPair& bad = audit.offending.front();
    throw PlanError("composed union is not orthogonal: states " + std::to_string(bad.first) + " and " +
                    std::to_string(bad.second) + " overlap " + std::to_string(bad.overlap) + " (" +
                    std::to_string(audit.offending.size()) + " offending pairs)");
  }
  return out;
}

}  // namespace gnl
