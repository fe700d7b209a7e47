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

#include "gnl/constructors/tripartite.hpp"

#include <set>
#include <tuple>

#include "gnl/verifier/certificate.hpp"
#include "gtest/gtest.h"
#include "support/oracles.hpp"

using namespace gnl;
using Support = std::set<std::vector<std::size_t>>;

namespace {

struct Instance {
  std::size_t x, y, z;
};

const std::vector<Instance> kInstances{{3, 4, 3}, {4, 4, 4}, {3, 5, 6}};

Support family_support(const StateSet& set, std::size_t begin, std::size_t end) {
  Support out;
  for (std::size_t i = begin; i < end; ++i) {
    const Support s = gnl::testing::support(set[i]);
    out.insert(s.begin(), s.end());
  }
  return out;
}

StateSet build(const Instance& t, std::uint64_t seed) {
  return build_theorem3(t.x, t.y, t.z, random_ufl(t.x - 1, seed), random_ufl(t.y - 1, seed + 1),
                        random_ufl(t.z - 1, seed + 2));
}

}  // namespace

TEST(primed_bases, transpositions) {
  EXPECT_EQ(primed_basis_b(4).perm(), (std::vector<std::size_t>{1, 0, 3, 2}));
  EXPECT_EQ(primed_basis_b(6).perm(), (std::vector<std::size_t>{1, 0, 2, 3, 5, 4}));
  EXPECT_EQ(primed_basis_c(3).perm(), (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_THROW(primed_basis_b(3), DomainError);
}

TEST(theorem3, counts_and_orthogonality) {
  for (const Instance& t : kInstances) {
    const StateSet set = build(t, 5);
    EXPECT_EQ(set.size(), 2 * t.x + 4 * t.y + 2 * t.z - 8);
    EXPECT_EQ(set.dims(), (PartyDims{t.x, t.y, t.z}));
    EXPECT_TRUE(check_orthogonality(set).pass());
    EXPECT_LE(check_orthogonality(set).max_overlap, 1e-12);
  }
  const auto f = [](std::size_t n) { return UflUnitary::make(fourier(n)); };
  EXPECT_EQ(build_theorem3(3, 4, 3, f(2), f(3), f(2)).size(), 20u);
  EXPECT_EQ(build_theorem3(4, 4, 4, f(3), f(3), f(3)).size(), 24u);  // 8 + 16 + 8 - 8
}

TEST(theorem3, rejects_small_dims) {
  const auto f = [](std::size_t n) { return UflUnitary::make(fourier(n)); };
  EXPECT_THROW(build_theorem3(3, 3, 3, f(2), f(2), f(2)), DomainError);
  EXPECT_THROW(build_theorem3(2, 4, 3, f(2), f(3), f(2)), DomainError);
}

TEST(theorem3, family_supports_are_disjoint_boundaries) {
  for (const Instance& t : kInstances) {
    const StateSet set = build(t, 9);
    const std::size_t n_psi = 2 * (t.x + t.y) - 4;
    const Support psi = family_support(set, 0, n_psi);
    const Support phi = family_support(set, n_psi, set.size());

    // Psi: |i>|j>|1> with i in {1, x} or j in {1, y}. Phi: |2>|j>|k> with
    // j in {2, y-1} or k in {2, z} (1-based labels, 0-based below).
    Support want_psi, want_phi;
    for (std::size_t i = 0; i < t.x; ++i) {
      for (std::size_t j = 0; j < t.y; ++j) {
        if (i == 0 || i == t.x - 1 || j == 0 || j == t.y - 1) want_psi.insert({i, j, 0});
      }
    }
    for (std::size_t j = 0; j < t.y; ++j) {
      for (std::size_t k = 0; k < t.z; ++k) {
        if (j == 1 || j == t.y - 2 || k == 1 || k == t.z - 1) want_phi.insert({1, j, k});
      }
    }
    EXPECT_EQ(psi, want_psi);
    EXPECT_EQ(phi, want_phi);
    for (const auto& idx : psi) EXPECT_EQ(phi.count(idx), 0u);
  }
}

TEST(theorem3, plan_union_is_the_family) {
  const auto X = random_ufl(2, 1), Y = random_ufl(3, 2), Z = random_ufl(2, 3);
  const CompositionPlan plan = theorem3_plan(3, 4, 3, X, Y, Z);
  EXPECT_EQ(place_blocks(plan), build_theorem3(3, 4, 3, X, Y, Z));
  EXPECT_EQ(plan.blocks.size(), 2u);
  EXPECT_NO_THROW(validate_plan(plan));
}

TEST(theorem3, structured_certificate) {
  for (const Instance& t : kInstances) {
    const auto X = random_ufl(t.x - 1, 11), Y = random_ufl(t.y - 1, 12), Z = random_ufl(t.z - 1, 13);
    const CompositionPlan plan = theorem3_plan(t.x, t.y, t.z, X, Y, Z);
    const Certificate cert = certify(plan, build_theorem3(t.x, t.y, t.z, X, Y, Z));
    EXPECT_EQ(cert.verdict, Verdict::Certified) << cert.reason;
    const auto& ev = std::get<CompositionEvidence>(cert.evidence);
    EXPECT_TRUE(ev.connected);
    EXPECT_TRUE(ev.audit.pass());
    ASSERT_EQ(ev.crossings.size(), 3u);
    for (const CrossingEntry& c : ev.crossings) {
      ASSERT_TRUE(c.block.has_value());
      EXPECT_EQ(ev.children[*c.block].verdict, Verdict::Certified);
    }
    ASSERT_EQ(ev.children.size(), 2u);
    for (const Certificate& child : ev.children) {
      EXPECT_TRUE(std::holds_alternative<DirectSweep>(child.evidence));
    }
  }
}
