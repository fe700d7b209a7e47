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

// Solution space of orthogonality-preserving measurements on one side of a
// bipartition.
//
// For a side S with complement S^c, write every state as u_i (x) v_i with
// u_i = kron of the S factors and v_i = kron of the S^c factors. A POVM
// element M (Hermitian on S) keeps states i != j orthogonal iff
//
//     <psi_i| M (x) I |psi_j> = (u_i^dag M u_j) <v_i|v_j> = 0.
//
// Pairs with |<v_i|v_j>| <= tol impose nothing. Every other pair contributes
// the complex equation u_i^dag M u_j = 0, i.e. two real equations in the d^2
// real coordinates of M (see herm_to_vec). For an orthogonal set the identity
// solves the system; the side is "trivial" when nothing else does.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gnl/errors.hpp"
#include "gnl/numerics.hpp"
#include "gnl/states.hpp"

namespace gnl {

inline constexpr std::size_t kDefaultSideCap = 100;

struct OpmOptions {
  double tol = kDefaultTol;
  std::size_t side_cap = kDefaultSideCap;
};

struct OpmReport {
  std::vector<std::size_t> side;  // 0-based parties
  std::size_t side_dim = 0;
  std::size_t constraint_count = 0;  // active pairs (two real equations each)
  std::size_t solution_dim = 0;
  bool trivial = false;
  /// Traceless-direction element of the solution space, present iff
  /// solution_dim > 1. solution_dim is 0 only for non-orthogonal input.
  std::optional<ComplexMatrix> witness;
};

namespace detail {

inline std::vector<std::size_t> complement(std::size_t parties, const std::vector<std::size_t>& side) {
  std::vector<std::size_t> rest;
  for (std::size_t p = 0; p < parties; ++p) {
    if (std::find(side.begin(), side.end(), p) == side.end()) rest.push_back(p);
  }
  return rest;
}

inline std::vector<std::size_t> checked_side(const StateSet& set, std::vector<std::size_t> side) {
  std::sort(side.begin(), side.end());
  if (side.empty() || side.size() >= set.parties()) {
    throw DimensionError("opm_space: side must be a nonempty proper subset of the parties");
  }
  if (std::adjacent_find(side.begin(), side.end()) != side.end() || side.back() >= set.parties()) {
    throw DimensionError("opm_space: side has repeated or out-of-range parties");
  }
  return side;
}

inline std::size_t side_dimension(const StateSet& set, const std::vector<std::size_t>& side) {
  std::size_t d = 1;
  for (std::size_t p : side) d *= set.dims()[p];
  return d;
}

inline ComplexVector side_vector(const ProductState& s, const std::vector<std::size_t>& side) {
  ComplexVector out{Complex{1.0, 0.0}};
  for (std::size_t p : side) out = kron(out, s.factors[p]);
  return out;
}

inline Complex complement_overlap(const ProductState& a, const ProductState& b, const std::vector<std::size_t>& rest) {
  Complex acc{1.0, 0.0};
  for (std::size_t p : rest) {
    acc *= inner(a.factors[p], b.factors[p]);
    if (acc == Complex{}) break;
  }
  return acc;
}

/// Real/imaginary rows of u^dag M w = 0 in herm_to_vec coordinates.
inline void append_pair_equations(RealLinearSystem& sys, const ComplexVector& u, const ComplexVector& w,
                                  std::vector<double>& re_row, std::vector<double>& im_row) {
  const std::size_t d = u.size();
  std::fill(re_row.begin(), re_row.end(), 0.0);
  std::fill(im_row.begin(), im_row.end(), 0.0);
  for (std::size_t a = 0; a < d; ++a) {
    const Complex c = std::conj(u[a]) * w[a];
    re_row[a] = c.real();
    im_row[a] = c.imag();
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      // M_ab = r + i s, M_ba = r - i s.
      const Complex ab = std::conj(u[a]) * w[b];
      const Complex ba = std::conj(u[b]) * w[a];
      const Complex coef_r = ab + ba;
      const Complex coef_s = Complex{0.0, 1.0} * (ab - ba);
      const std::size_t slot = herm_offdiag_slot(d, a, b);
      re_row[slot] = coef_r.real();
      im_row[slot] = coef_r.imag();
      re_row[slot + 1] = coef_s.real();
      im_row[slot + 1] = coef_s.imag();
    }
  }
  sys.add_equation(re_row);
  sys.add_equation(im_row);
}

}  // namespace detail

/// Constraint system for side `side` (0-based parties), plus the number of
/// active pairs. Throws BudgetError if the side dimension exceeds the cap.
inline std::pair<RealLinearSystem, std::size_t> opm_constraints(const StateSet& set, std::vector<std::size_t> side,
                                                                const OpmOptions& options = {}) {
  side = detail::checked_side(set, std::move(side));
  const std::size_t d = detail::side_dimension(set, side);
  if (d > options.side_cap) {
    throw BudgetError("side " + std::to_string(d) + "-dimensional exceeds cap " + std::to_string(options.side_cap));
  }
  const std::vector<std::size_t> rest = detail::complement(set.parties(), side);
  std::vector<ComplexVector> u;
  u.reserve(set.size());
  for (const ProductState& s : set.states()) u.push_back(detail::side_vector(s, side));

  RealLinearSystem sys(d * d);
  std::vector<double> re_row(d * d), im_row(d * d);
  std::size_t active = 0;
  const auto& states = set.states();
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (std::abs(detail::complement_overlap(states[i], states[j], rest)) <= options.tol) continue;
      detail::append_pair_equations(sys, u[i], u[j], re_row, im_row);
      ++active;
    }
  }
  return {std::move(sys), active};
}

inline OpmReport opm_space(const StateSet& set, std::vector<std::size_t> side, const OpmOptions& options = {}) {
  side = detail::checked_side(set, std::move(side));
  auto [sys, active] = opm_constraints(set, side, options);
  const std::size_t d = detail::side_dimension(set, side);
  std::vector<RealVector> basis = null_space(sys, options.tol);

  OpmReport report;
  report.side = side;
  report.side_dim = d;
  report.constraint_count = active;
  report.solution_dim = basis.size();
  report.trivial = basis.size() == 1;
  if (basis.size() > 1) {
    // Strip the identity direction and keep the basis vector with the largest
    // remainder.
    const RealVector id = herm_to_vec(ComplexMatrix::identity(d));
    const double id_sq = static_cast<double>(d);
    RealVector best;
    double best_norm = -1.0;
    for (const RealVector& v : basis) {
      double dot = 0.0;
      for (std::size_t k = 0; k < v.size(); ++k) dot += v[k] * id[k];
      RealVector w = v;
      for (std::size_t k = 0; k < w.size(); ++k) w[k] -= dot / id_sq * id[k];
      double n = 0.0;
      for (double c : w) n += c * c;
      if (n > best_norm) {
        best_norm = n;
        best = std::move(w);
      }
    }
    const double scale = std::sqrt(best_norm);
    std::size_t lead = 0;
    for (std::size_t k = 1; k < best.size(); ++k) {
      if (std::abs(best[k]) > std::abs(best[lead]) + 1e-12) lead = k;
    }
    const double sign = best[lead] < 0 ? -1.0 : 1.0;
    for (double& c : best) {
      c = sign * c / scale;
      if (std::abs(c) < 1e-14) c = 0.0;
    }
    report.witness = vec_to_herm(best, d);
  }
  return report;
}

}  // namespace gnl
