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

#include "gnl/constructors/ufl.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "support/oracles.hpp"

using namespace gnl;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

std::size_t real_rank(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  }
  return gnl::testing::complex_rank(e);
}

}  // namespace

TEST(ufl_check, examples) {
  EXPECT_TRUE(ufl_check(hadamard2()));
  EXPECT_FALSE(ufl_check(ComplexMatrix::identity(2)));
  EXPECT_TRUE(ufl_check(fourier(3)));
  EXPECT_THROW(ufl_check(ComplexMatrix::from_rows({{1, 1}, {1, -1}})), InputError);
}

TEST(ufl_check, first_and_last_rows_matter_middle_does_not) {
  // Middle row with a zero is fine; a zero in the last row is not.
  const double s3 = 1.0 / std::sqrt(3.0);
  const auto m = ComplexMatrix::from_rows({{s3, s3, s3}, {kS, -kS, 0}, {s3 * kS, s3 * kS, -2 * s3 * kS}});
  ASSERT_TRUE(is_unitary(m, 1e-12));
  EXPECT_TRUE(ufl_check(m));
  const auto swapped = ComplexMatrix::from_rows({{s3, s3, s3}, {s3 * kS, s3 * kS, -2 * s3 * kS}, {kS, -kS, 0}});
  EXPECT_FALSE(ufl_check(swapped));
  // First column zero-free is not enough.
  EXPECT_THROW(UflUnitary::make(swapped), InputError);
}

TEST(ufl_check, floor_is_strict) {
  const double eps = 1e-7;
  const double c = std::sqrt(1.0 - eps * eps);
  const auto m = ComplexMatrix::from_rows({{c, eps}, {-eps, c}});
  EXPECT_FALSE(ufl_check(m, 1e-6));
  EXPECT_TRUE(ufl_check(m, 1e-8));
}

TEST(random_ufl, deterministic_and_valid) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
      const UflUnitary a = random_ufl(n, seed);
      const UflUnitary b = random_ufl(n, seed);
      EXPECT_EQ(a.matrix(), b.matrix());
      EXPECT_TRUE(is_unitary(a.matrix(), 1e-9));
      EXPECT_TRUE(ufl_check(a.matrix()));
    }
  }
  EXPECT_NE(random_ufl(3, 1).matrix(), random_ufl(3, 2).matrix());
}

TEST(random_ufl, qubit_rows_nonzero) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexMatrix m = random_ufl(2, seed).matrix();
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) EXPECT_GT(std::abs(m(r, c)), 1e-6);
    }
  }
}

TEST(UnitarySource, parse_and_draw) {
  EXPECT_EQ(UnitarySource::parse("hadamard").draw(2).matrix(), hadamard2());
  EXPECT_THROW(UnitarySource::parse("hadamard").draw(3), DomainError);
  EXPECT_EQ(UnitarySource::parse("fourier").draw(4).matrix(), fourier(4));
  const auto r = UnitarySource::parse("random:17");
  EXPECT_EQ(r.seed(), 17u);
  EXPECT_EQ(r.draw(3, 0).matrix(), r.draw(3, 0).matrix());
  EXPECT_NE(r.draw(3, 0).matrix(), r.draw(3, 1).matrix());
  EXPECT_EQ(UnitarySource::parse("random", 17).draw(3, 2).matrix(), r.draw(3, 2).matrix());
  EXPECT_THROW(UnitarySource::parse("random:x"), InputError);
  EXPECT_THROW(UnitarySource::parse("pauli"), InputError);
}

TEST(extension, hadamard_in_dimension_three) {
  const auto h = UflUnitary::make(hadamard2());
  const auto up = up_extension(h, OrderedBasis::identity(3));
  const auto down = down_extension(h, OrderedBasis::identity(3));
  EXPECT_LE(max_abs_diff(up, ComplexMatrix::from_rows({{kS, kS, 0}, {kS, -kS, 0}, {0, 0, 0}})), 1e-15);
  EXPECT_LE(max_abs_diff(down, ComplexMatrix::from_rows({{0, 0, 0}, {0, kS, kS}, {0, kS, -kS}})), 1e-15);
  EXPECT_EQ(up * basis_vector(3, 2), ComplexVector(3, Complex{}));
  EXPECT_EQ(down * basis_vector(3, 0), ComplexVector(3, Complex{}));
  EXPECT_THROW(up_extension(h, OrderedBasis::identity(4)), DimensionError);
}

TEST(extension, follows_the_ordered_basis) {
  const auto h = UflUnitary::make(hadamard2());
  const OrderedBasis b = OrderedBasis::transpositions(3, {{0, 2}});
  const auto up = up_extension(h, b);
  // Logical |1>,|2> are computational |3>,|2>; logical |3> is computational |1>.
  EXPECT_EQ(up * basis_vector(3, 0), ComplexVector(3, Complex{}));
  EXPECT_NEAR(up(2, 2).real(), kS, 1e-15);
  EXPECT_NEAR(up(1, 1).real(), -kS, 1e-15);
}

TEST(extension, partial_isometry_properties) {
  std::mt19937_64 rng(12);
  for (std::size_t n = 3; n <= 7; ++n) {
    const UflUnitary h = random_ufl(n - 1, n);
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    const OrderedBasis basis(perm);
    const auto up = up_extension(h, basis);
    const auto down = down_extension(h, basis);
    EXPECT_EQ(real_rank(up), n - 1);
    EXPECT_EQ(real_rank(down), n - 1);
    // E^dagger E is a projector.
    const auto pu = up.adjoint() * up;
    EXPECT_LE(max_abs_diff(pu * pu, pu), 1e-12);
    const auto pd = down.adjoint() * down;
    EXPECT_LE(max_abs_diff(pd * pd, pd), 1e-12);
    EXPECT_LE(real_rank(up * down.adjoint()), n - 2);
  }
}
