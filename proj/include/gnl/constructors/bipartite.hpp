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

// The 2(x+y)-4 state bipartite family built from two U_FL unitaries. The
// states cover the boundary of the x-by-y grid of computational product
// states: a top edge, a right edge, a bottom edge and a left edge, each
// obtained by acting with an up or down extension on a basis vector.

#include <string>

#include "gnl/constructors/ufl.hpp"
#include "gnl/errors.hpp"
#include "gnl/states.hpp"

namespace gnl {

inline constexpr const char* kQubitNecessityNote =
    "every party needs dimension >= 3: any orthogonal product set in C^2 (x) C^d is locally "
    "distinguishable";

namespace detail {

inline ComplexVector unit_column(const ComplexMatrix& m, std::size_t c) {
  return normalized(m.col(c));
}

inline ComplexVector logical_basis_vector(const OrderedBasis& basis, std::size_t k) {
  return basis_vector(basis.dim(), basis[k]);
}

}  // namespace detail

/// States, in order (indices 0-based, |k> the k-th element of the ordered basis):
///   |0> (x) Y_up|i>        i = 0 .. y-2
///   X_up|j> (x) |y-1>      j = 0 .. x-2
///   |x-1> (x) Y_down|k>    k = 1 .. y-1
///   X_down|l> (x) |0>      l = 1 .. x-1
inline StateSet build_theorem1(std::size_t x, std::size_t y, const UflUnitary& X, const UflUnitary& Y,
                               const OrderedBasis& basis_a, const OrderedBasis& basis_b) {
  if (x < 3 || y < 3) {
    throw DomainError("theorem1: dims (" + std::to_string(x) + ", " + std::to_string(y) + ") rejected; " +
                      kQubitNecessityNote);
  }
  if (X.n() + 1 != x || Y.n() + 1 != y) {
    throw DimensionError("theorem1: X must be (x-1)x(x-1) and Y (y-1)x(y-1)");
  }
  if (basis_a.dim() != x || basis_b.dim() != y) {
    throw DimensionError("theorem1: ordered bases must have dims (x, y)");
  }

  const ComplexMatrix x_up = up_extension(X, basis_a);
  const ComplexMatrix x_down = down_extension(X, basis_a);
  const ComplexMatrix y_up = up_extension(Y, basis_b);
  const ComplexMatrix y_down = down_extension(Y, basis_b);

  const ComplexVector a_first = detail::logical_basis_vector(basis_a, 0);
  const ComplexVector a_last = detail::logical_basis_vector(basis_a, x - 1);
  const ComplexVector b_first = detail::logical_basis_vector(basis_b, 0);
  const ComplexVector b_last = detail::logical_basis_vector(basis_b, y - 1);

  std::vector<ProductState> states;
  states.reserve(2 * (x + y) - 4);
  for (std::size_t i = 0; i + 1 < y; ++i) {
    states.push_back({{a_first, detail::unit_column(y_up, basis_b[i])}});
  }
  for (std::size_t j = 0; j + 1 < x; ++j) {
    states.push_back({{detail::unit_column(x_up, basis_a[j]), b_last}});
  }
  for (std::size_t k = 1; k < y; ++k) {
    states.push_back({{a_last, detail::unit_column(y_down, basis_b[k])}});
  }
  for (std::size_t l = 1; l < x; ++l) {
    states.push_back({{detail::unit_column(x_down, basis_a[l]), b_first}});
  }
  return StateSet(PartyDims{x, y}, std::move(states),
                  "theorem1 x=" + std::to_string(x) + " y=" + std::to_string(y));
}

inline StateSet build_theorem1(std::size_t x, std::size_t y, const UflUnitary& X, const UflUnitary& Y) {
  if (x < 3 || y < 3) {
    throw DomainError("theorem1: dims (" + std::to_string(x) + ", " + std::to_string(y) + ") rejected; " +
                      kQubitNecessityNote);
  }
  return build_theorem1(x, y, X, Y, OrderedBasis::identity(x), OrderedBasis::identity(y));
}

}  // namespace gnl
