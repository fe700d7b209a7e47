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

#include "gnl/constructors/bipartite.hpp"

#include <cmath>
#include <random>

#include "gnl/verifier/certificate.hpp"
#include "gtest/gtest.h"
#include "support/oracles.hpp"

using namespace gnl;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

Eigen::VectorXcd computational(std::size_t x, std::size_t y, std::size_t i, std::size_t j) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(x * y);
  v(i * y + j) = 1.0;
  return v;
}

OrderedBasis shuffled(std::size_t d, std::mt19937_64& rng) {
  std::vector<std::size_t> p(d);
  for (std::size_t k = 0; k < d; ++k) p[k] = k;
  std::shuffle(p.begin(), p.end(), rng);
  return OrderedBasis(p);
}

}  // namespace

TEST(theorem1, hadamard_3x3_states) {
  const auto h = UflUnitary::make(hadamard2());
  const StateSet set = build_theorem1(3, 3, h, h);
  ASSERT_EQ(set.size(), 8u);
  EXPECT_EQ(set.dims(), (PartyDims{3, 3}));
  // psi_1 = |1>(|1>+|2>)/sqrt2 and psi_5 = |3>(|2>+|3>)/sqrt2.
  EXPECT_LE(max_abs_diff(set[0].factors[0], basis_vector(3, 0)), 1e-15);
  EXPECT_LE(max_abs_diff(set[0].factors[1], ComplexVector{kS, kS, 0}), 1e-15);
  EXPECT_LE(max_abs_diff(set[4].factors[0], basis_vector(3, 2)), 1e-15);
  EXPECT_LE(max_abs_diff(set[4].factors[1], ComplexVector{0, kS, kS}), 1e-15);
}

TEST(theorem1, counts) {
  EXPECT_EQ(build_theorem1(5, 9, random_ufl(4, 1), random_ufl(8, 2)).size(), 24u);
  for (std::size_t x = 3; x <= 9; ++x) {
    for (std::size_t y = 3; y <= 9; ++y) {
      const StateSet set = build_theorem1(x, y, UflUnitary::make(fourier(x - 1)), random_ufl(y - 1, x * 10 + y));
      EXPECT_EQ(set.size(), 2 * (x + y) - 4);
      const auto audit = check_orthogonality(set, 1e-12);
      EXPECT_TRUE(audit.pass()) << x << "x" << y;
      EXPECT_LE(audit.max_overlap, 1e-12);
      for (const ProductState& s : set.states()) {
        for (const ComplexVector& f : s.factors) EXPECT_NEAR(norm(f), 1.0, 1e-15);
      }
    }
  }
}

TEST(theorem1, rejects_qubits) {
  const auto h = UflUnitary::make(hadamard2());
  const auto f4 = UflUnitary::make(fourier(4));
  try {
    build_theorem1(2, 5, h, f4);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("locally distinguishable"), std::string::npos) << e.what();
  }
  EXPECT_THROW(build_theorem1(3, 4, h, h), DimensionError);
}

TEST(theorem1, boundary_span) {
  std::mt19937_64 rng(4);
  for (auto [x, y] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}, {3, 4}, {4, 4}, {4, 5}, {5, 9}}) {
    const StateSet set = build_theorem1(x, y, random_ufl(x - 1, rng()), random_ufl(y - 1, rng()));
    const Eigen::MatrixXcd m = gnl::testing::assembled_columns(set);
    EXPECT_EQ(gnl::testing::complex_rank(m), 2 * (x + y) - 4);
    std::size_t boundary = 0;
    for (std::size_t i = 0; i < x; ++i) {
      for (std::size_t j = 0; j < y; ++j) {
        const bool edge = i == 0 || i == x - 1 || j == 0 || j == y - 1;
        const double r = gnl::testing::span_residual(m, computational(x, y, i, j));
        if (edge) {
          ++boundary;
          EXPECT_LE(r, 1e-9) << i << "," << j;
        } else {
          EXPECT_GT(r, 0.5) << "interior " << i << "," << j;
        }
      }
    }
    EXPECT_EQ(boundary, 2 * (x + y) - 4);
  }
}

TEST(theorem1, opm_trivial_on_both_sides_matches_brute_force) {
  const auto h = UflUnitary::make(hadamard2());
  const StateSet set = build_theorem1(3, 3, h, h);
  for (std::size_t side : {0u, 1u}) {
    const OpmReport r = opm_space(set, {side});
    EXPECT_EQ(r.solution_dim, 1u);
    EXPECT_TRUE(r.trivial);
    EXPECT_EQ(gnl::testing::brute_force_solution_dim(set, {side}, 1e-9), 1u);
  }
}

TEST(theorem1, certified_under_permuted_bases) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t x = 3 + trial % 3, y = 3 + (trial / 3) % 3;
    const StateSet set = build_theorem1(x, y, random_ufl(x - 1, rng()), random_ufl(y - 1, rng()),
                                        shuffled(x, rng), shuffled(y, rng));
    EXPECT_EQ(set.size(), 2 * (x + y) - 4);
    EXPECT_TRUE(check_orthogonality(set).pass());
    EXPECT_EQ(direct_sweep(set).verdict, Verdict::Certified) << x << "x" << y;
  }
}
