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

// Bipartitions of a party set and the composition graph of a plan.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gnl/errors.hpp"
#include "gnl/plan.hpp"

namespace gnl {

/// Split of {0..L-1} into two nonempty sides. Canonical form: party 0 is on
/// the left.
struct Bipartition {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// All 2^(L-1) - 1 canonical bipartitions, left sides in lexicographic order.
inline std::vector<Bipartition> bipartitions(std::size_t L) {
  if (L < 2) return {};
  if (L > 31) throw BudgetError("bipartitions: too many parties (" + std::to_string(L) + ")");
  std::vector<Bipartition> out;
  const std::uint32_t others = L - 1;
  const std::uint32_t full = (std::uint32_t{1} << others) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    Bipartition b;
    b.left.push_back(0);
    for (std::uint32_t k = 0; k < others; ++k) {
      (mask >> k & 1u ? b.left : b.right).push_back(k + 1);
    }
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Bipartition& a, const Bipartition& b) { return a.left < b.left; });
  return out;
}

class CompositionGraph {
 public:
  explicit CompositionGraph(std::size_t vertices) : vertices_(vertices) {}

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= vertices_ || v >= vertices_) throw DimensionError("CompositionGraph: vertex out of range");
    if (u == v) return;
    edges_.emplace(std::min(u, v), std::max(u, v));
  }

  void add_clique(const std::vector<std::size_t>& members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) add_edge(members[i], members[j]);
    }
  }

  std::size_t vertex_count() const { return vertices_; }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

 private:
  std::size_t vertices_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

inline CompositionGraph build_graph(std::size_t parties, const std::vector<std::vector<std::size_t>>& subsets) {
  CompositionGraph g(parties);
  for (const auto& s : subsets) g.add_clique(s);
  return g;
}

inline std::vector<std::vector<std::size_t>> block_subsets(const CompositionPlan& plan) {
  std::vector<std::vector<std::size_t>> subsets;
  for (const PlanBlock& b : plan.blocks) subsets.push_back(b.parties);
  return subsets;
}

inline CompositionGraph build_graph(const CompositionPlan& plan) {
  return build_graph(plan.dims.size(), block_subsets(plan));
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace detail

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<std::size_t>> components(const CompositionGraph& g) {
  detail::UnionFind uf(g.vertex_count());
  for (auto [u, v] : g.edges()) uf.unite(u, v);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(g.vertex_count(), g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = uf.find(v);
    if (slot[r] == g.vertex_count()) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

inline bool is_connected(const CompositionGraph& g) { return components(g).size() <= 1; }

/// First block whose party subset meets both sides of `b`, if any.
inline std::optional<std::size_t> crossing_block(const std::vector<std::vector<std::size_t>>& subsets,
                                                 const Bipartition& b) {
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    bool hits_left = false;
    bool hits_right = false;
    for (std::size_t p : subsets[i]) {
      if (std::find(b.left.begin(), b.left.end(), p) != b.left.end()) hits_left = true;
      if (std::find(b.right.begin(), b.right.end(), p) != b.right.end()) hits_right = true;
    }
    if (hits_left && hits_right) return i;
  }
  return std::nullopt;
}

}  // namespace gnl
