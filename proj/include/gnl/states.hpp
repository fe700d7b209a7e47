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

// Factored multipartite product states and ordered state sets.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gnl/errors.hpp"
#include "gnl/numerics.hpp"

namespace gnl {

inline constexpr double kNormTol = 1e-9;

/// Local dimensions d_1..d_L of an L-party system (L >= 2).
class PartyDims {
 public:
  PartyDims(std::initializer_list<std::size_t> dims) : PartyDims(std::vector<std::size_t>(dims)) {}
  explicit PartyDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2) {
      throw DimensionError("PartyDims: need at least 2 parties, got " + std::to_string(dims_.size()));
    }
    for (std::size_t d : dims_) {
      if (d == 0) throw DimensionError("PartyDims: party dimension must be positive");
    }
  }

  std::size_t size() const { return dims_.size(); }
  std::size_t operator[](std::size_t party) const { return dims_.at(party); }
  const std::vector<std::size_t>& values() const { return dims_; }
  auto begin() const { return dims_.begin(); }
  auto end() const { return dims_.end(); }

  std::size_t min_dim() const { return *std::min_element(dims_.begin(), dims_.end()); }

  friend bool operator==(const PartyDims&, const PartyDims&) = default;

 private:
  std::vector<std::size_t> dims_;
};

inline std::string to_string(const PartyDims& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + "]";
}

/// One factor per party, in party order.
struct ProductState {
  std::vector<ComplexVector> factors;

  friend bool operator==(const ProductState&, const ProductState&) = default;
};

/// Computational basis vector |k> (0-based) of a d-dimensional party.
inline ComplexVector basis_vector(std::size_t d, std::size_t k) {
  if (k >= d) throw DimensionError("basis_vector: index " + std::to_string(k) + " >= dim " + std::to_string(d));
  ComplexVector v(d, Complex{});
  v[k] = 1.0;
  return v;
}

inline ComplexVector normalized(ComplexVector v) {
  const double n = norm(v);
  if (n == 0.0) throw InputError("normalized: zero vector");
  for (Complex& z : v) z /= n;
  return v;
}

/// Ordered set of product states over fixed party dimensions.
class StateSet {
 public:
  StateSet(PartyDims dims, std::vector<ProductState> states, std::string label = {})
      : dims_(std::move(dims)), states_(std::move(states)), label_(std::move(label)) {
    for (std::size_t i = 0; i < states_.size(); ++i) validate(i);
  }

  const PartyDims& dims() const { return dims_; }
  std::size_t parties() const { return dims_.size(); }
  const std::vector<ProductState>& states() const { return states_; }
  const ProductState& operator[](std::size_t i) const { return states_.at(i); }
  std::size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  void validate(std::size_t index) const {
    const ProductState& s = states_[index];
    const std::string where = "state " + std::to_string(index);
    if (s.factors.size() != dims_.size()) {
      throw InputError(where + ": has " + std::to_string(s.factors.size()) + " factors, expected " +
                       std::to_string(dims_.size()));
    }
    for (std::size_t p = 0; p < s.factors.size(); ++p) {
      const ComplexVector& f = s.factors[p];
      if (f.size() != dims_[p]) {
        throw InputError(where + " factor " + std::to_string(p) + ": length " +
                         std::to_string(f.size()) + ", expected " + std::to_string(dims_[p]));
      }
      for (const Complex& z : f) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
          throw InputError(where + " factor " + std::to_string(p) + ": non-finite amplitude");
        }
      }
      const double n = norm(f);
      if (std::abs(n - 1.0) > kNormTol) {
        throw InputError(where + " factor " + std::to_string(p) + ": norm " + std::to_string(n) +
                         " is not 1");
      }
    }
  }

  PartyDims dims_;
  std::vector<ProductState> states_;
  std::string label_;
};

/// Permutation of the computational basis: logical index k sits at
/// computational index perm[k] (both 0-based).
class OrderedBasis {
 public:
  explicit OrderedBasis(std::vector<std::size_t> perm) : perm_(std::move(perm)) {
    if (perm_.empty()) throw DimensionError("OrderedBasis: dimension must be positive");
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t p : perm_) {
      if (p >= perm_.size() || seen[p]) throw InputError("OrderedBasis: not a permutation");
      seen[p] = true;
    }
  }

  static OrderedBasis identity(std::size_t dim) {
    std::vector<std::size_t> p(dim);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return OrderedBasis(std::move(p));
  }

  /// Identity with the given disjoint transpositions applied.
  static OrderedBasis transpositions(std::size_t dim,
                                     std::initializer_list<std::pair<std::size_t, std::size_t>> swaps) {
    std::vector<std::size_t> p(dim);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (auto [a, b] : swaps) {
      if (a >= dim || b >= dim) throw DimensionError("OrderedBasis::transpositions: index out of range");
      std::swap(p[a], p[b]);
    }
    return OrderedBasis(std::move(p));
  }

  std::size_t dim() const { return perm_.size(); }
  std::size_t operator[](std::size_t logical) const { return perm_.at(logical); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  bool is_identity() const {
    for (std::size_t k = 0; k < perm_.size(); ++k) {
      if (perm_[k] != k) return false;
    }
    return true;
  }

  OrderedBasis inverse() const {
    std::vector<std::size_t> inv(perm_.size());
    for (std::size_t k = 0; k < perm_.size(); ++k) inv[perm_[k]] = k;
    return OrderedBasis(std::move(inv));
  }

  friend bool operator==(const OrderedBasis&, const OrderedBasis&) = default;

 private:
  std::vector<std::size_t> perm_;
};

/// Moves logical coordinate k of `v` to computational coordinate basis[k].
inline ComplexVector apply_basis(std::span<const Complex> v, const OrderedBasis& basis) {
  if (v.size() != basis.dim()) {
    throw DimensionError("apply_basis: vector length " + std::to_string(v.size()) +
                         " vs basis dim " + std::to_string(basis.dim()));
  }
  ComplexVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[basis[k]] = v[k];
  return out;
}

/// <a|b> as the product of per-party factor overlaps.
inline Complex inner_product(const ProductState& a, const ProductState& b) {
  if (a.factors.size() != b.factors.size()) {
    throw DimensionError("inner_product: party counts differ");
  }
  Complex acc{1.0, 0.0};
  for (std::size_t p = 0; p < a.factors.size(); ++p) {
    acc *= inner(a.factors[p], b.factors[p]);
    if (acc == Complex{}) break;
  }
  return acc;
}

/// Global state vector: kron of the factors in party order.
inline ComplexVector assemble(const ProductState& s) {
  ComplexVector out{Complex{1.0, 0.0}};
  for (const ComplexVector& f : s.factors) out = kron(out, f);
  return out;
}

/// Relabels parties: new party q carries old party order[q].
inline StateSet permute_parties(const StateSet& set, const std::vector<std::size_t>& order) {
  const std::size_t L = set.parties();
  if (order.size() != L) throw DimensionError("permute_parties: order length mismatch");
  std::vector<bool> seen(L, false);
  for (std::size_t o : order) {
    if (o >= L || seen[o]) throw InputError("permute_parties: order is not a permutation");
    seen[o] = true;
  }
  std::vector<std::size_t> dims(L);
  for (std::size_t q = 0; q < L; ++q) dims[q] = set.dims()[order[q]];
  std::vector<ProductState> states;
  states.reserve(set.size());
  for (const ProductState& s : set.states()) {
    ProductState t;
    t.factors.reserve(L);
    for (std::size_t q = 0; q < L; ++q) t.factors.push_back(s.factors[order[q]]);
    states.push_back(std::move(t));
  }
  return StateSet(PartyDims(std::move(dims)), std::move(states), set.label());
}

}  // namespace gnl
