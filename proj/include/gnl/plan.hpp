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

// Composition plans: a party set P = {0..L-1}, and blocks (P_i, seed set on
// P_i, fixed product padding on P \ P_i). Placing every block and taking the
// union yields the composed state set.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gnl/errors.hpp"
#include "gnl/states.hpp"

namespace gnl {

struct CompositionPlan;

struct PlanBlock {
  /// Seed party t is placed on parties[t]; listed order matters.
  std::vector<std::size_t> parties;
  StateSet seed;
  /// One unit factor for every party outside `parties`.
  std::map<std::size_t, ComplexVector> padding;
  /// Optional plan that certifies the seed itself (nested composition).
  std::shared_ptr<const CompositionPlan> seed_plan;
  /// User-supplied reference vouching for the seed without a check.
  std::optional<std::string> external_attestation;
};

struct CompositionPlan {
  PartyDims dims;
  std::vector<PlanBlock> blocks;
  std::string label;
};

inline std::string party_list(const std::vector<std::size_t>& parties) {
  std::string s = "{";
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parties[i] + 1);
  }
  return s + "}";
}

/// Places each seed state on `layout` inside `target` and fills the remaining
/// parties with the fixed `padding` factors.
inline StateSet pad(const StateSet& seed, const std::vector<std::size_t>& layout, const PartyDims& target,
                    const std::map<std::size_t, ComplexVector>& padding) {
  const std::size_t L = target.size();
  if (layout.size() != seed.parties()) {
    throw InputError("pad: layout has " + std::to_string(layout.size()) + " entries for a " +
                     std::to_string(seed.parties()) + "-party seed");
  }
  std::vector<int> owner(L, -1);
  for (std::size_t t = 0; t < layout.size(); ++t) {
    const std::size_t p = layout[t];
    if (p >= L) throw InputError("pad: layout party " + std::to_string(p + 1) + " out of range");
    if (owner[p] != -1) throw InputError("pad: layout is not injective at party " + std::to_string(p + 1));
    if (target[p] != seed.dims()[t]) {
      throw InputError("pad: seed party " + std::to_string(t + 1) + " has dim " +
                       std::to_string(seed.dims()[t]) + " but target party " + std::to_string(p + 1) +
                       " has dim " + std::to_string(target[p]));
    }
    owner[p] = static_cast<int>(t);
  }
  for (const auto& [p, f] : padding) {
    if (p >= L || owner[p] != -1) {
      throw InputError("pad: padding given for party " + std::to_string(p + 1) +
                       " which is not a free party");
    }
    if (f.size() != target[p]) {
      throw InputError("pad: padding factor for party " + std::to_string(p + 1) + " has length " +
                       std::to_string(f.size()) + ", expected " + std::to_string(target[p]));
    }
    if (std::abs(norm(f) - 1.0) > kNormTol) {
      throw InputError("pad: padding factor for party " + std::to_string(p + 1) + " is not unit-norm");
    }
  }
  for (std::size_t p = 0; p < L; ++p) {
    if (owner[p] == -1 && !padding.contains(p)) {
      throw InputError("pad: no padding factor for party " + std::to_string(p + 1));
    }
  }

  std::vector<ProductState> out;
  out.reserve(seed.size());
  for (const ProductState& s : seed.states()) {
    ProductState t;
    t.factors.reserve(L);
    for (std::size_t p = 0; p < L; ++p) {
      t.factors.push_back(owner[p] >= 0 ? s.factors[static_cast<std::size_t>(owner[p])] : padding.at(p));
    }
    out.push_back(std::move(t));
  }
  return StateSet(target, std::move(out), seed.label());
}

/// Structural checks on a plan (no graph or orthogonality checks here).
inline void validate_plan(const CompositionPlan& plan) {
  const std::size_t L = plan.dims.size();
  if (plan.blocks.empty()) throw PlanError("plan has no blocks");
  for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
    const PlanBlock& block = plan.blocks[b];
    const std::string where = "block " + std::to_string(b + 1);
    std::set<std::size_t> distinct(block.parties.begin(), block.parties.end());
    if (block.parties.empty() || distinct.size() != block.parties.size()) {
      throw PlanError(where + ": party subset must be nonempty with distinct parties");
    }
    if (block.parties.size() >= L) throw PlanError(where + ": party subset must be a proper subset");
    for (std::size_t p : block.parties) {
      if (p >= L) throw PlanError(where + ": party " + std::to_string(p + 1) + " out of range");
    }
    if (block.seed.parties() != block.parties.size()) {
      throw PlanError(where + ": seed has " + std::to_string(block.seed.parties()) + " parties, subset " +
                      party_list(block.parties) + " has " + std::to_string(block.parties.size()));
    }
    for (std::size_t t = 0; t < block.parties.size(); ++t) {
      if (block.seed.dims()[t] != plan.dims[block.parties[t]]) {
        throw PlanError(where + ": seed dims " + to_string(block.seed.dims()) +
                        " do not match plan dims on " + party_list(block.parties));
      }
    }
    if (block.seed_plan && !(block.seed_plan->dims == block.seed.dims())) {
      throw PlanError(where + ": nested seed plan dims differ from the seed's dims");
    }
    try {
      (void)pad(StateSet(block.seed.dims(), {}), block.parties, plan.dims, block.padding);
    } catch (const InputError& e) {
      throw PlanError(where + ": " + e.what());
    }
  }
}

/// Union of all placed blocks, in block order. No orthogonality check.
inline StateSet place_blocks(const CompositionPlan& plan) {
  validate_plan(plan);
  std::vector<ProductState> all;
  for (const PlanBlock& block : plan.blocks) {
    StateSet placed = pad(block.seed, block.parties, plan.dims, block.padding);
    all.insert(all.end(), placed.states().begin(), placed.states().end());
  }
  return StateSet(plan.dims, std::move(all), plan.label);
}

/// Relabels parties of a plan the same way permute_parties relabels a set:
/// new party q is old party order[q].
inline CompositionPlan permute_plan(const CompositionPlan& plan, const std::vector<std::size_t>& order) {
  const std::size_t L = plan.dims.size();
  if (order.size() != L) throw DimensionError("permute_plan: order length mismatch");
  std::vector<std::size_t> new_index(L, L);
  for (std::size_t q = 0; q < L; ++q) {
    if (order[q] >= L || new_index[order[q]] != L) throw InputError("permute_plan: not a permutation");
    new_index[order[q]] = q;
  }
  std::vector<std::size_t> dims(L);
  for (std::size_t q = 0; q < L; ++q) dims[q] = plan.dims[order[q]];
  CompositionPlan out{PartyDims(std::move(dims)), {}, plan.label};
  for (const PlanBlock& block : plan.blocks) {
    PlanBlock nb = block;
    for (std::size_t& p : nb.parties) p = new_index.at(p);
    nb.padding.clear();
    for (const auto& [p, f] : block.padding) nb.padding.emplace(new_index.at(p), f);
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

}  // namespace gnl
