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

// Unitaries whose first and last rows have no zero entries, plus the
// up/down extensions that embed them into one more dimension.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <string_view>

#include "gnl/errors.hpp"
#include "gnl/numerics.hpp"
#include "gnl/states.hpp"

namespace gnl {

inline constexpr double kUflFloor = 1e-6;

/// True iff every first-row and last-row entry has modulus above `floor`.
/// Throws InputError if `u` is not unitary within `unitary_tol`.
inline bool ufl_check(const ComplexMatrix& u, double floor = kUflFloor, double unitary_tol = kDefaultTol) {
  if (!is_unitary(u, unitary_tol)) throw InputError("ufl_check: matrix is not unitary");
  const std::size_t n = u.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(u(0, k)) <= floor || std::abs(u(n - 1, k)) <= floor) return false;
  }
  return true;
}

class UflUnitary {
 public:
  static UflUnitary make(ComplexMatrix m, double floor = kUflFloor) {
    if (!m.is_square()) throw DimensionError("UflUnitary: matrix is not square");
    if (m.rows() < 2) throw DomainError("UflUnitary: dimension must be at least 2");
    if (!ufl_check(m, floor)) {
      throw InputError("UflUnitary: first or last row has an entry of modulus <= " + std::to_string(floor));
    }
    return UflUnitary(std::move(m));
  }

  std::size_t n() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  explicit UflUnitary(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

inline ComplexMatrix hadamard2() {
  const double s = 1.0 / std::numbers::sqrt2;
  return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

/// Discrete Fourier matrix, entries w^{jk} / sqrt(n).
inline ComplexMatrix fourier(std::size_t n) {
  ComplexMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce the exponent first so large n keeps full phase accuracy.
      const double phase = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      f(j, k) = std::polar(scale, phase);
    }
  }
  return f;
}

namespace detail {

// Gram-Schmidt (two passes) on the columns of a complex Gaussian matrix.
// Positive diagonal of the implied R makes the result Haar distributed.
inline ComplexMatrix orthonormalize_columns(const ComplexMatrix& g) {
  const std::size_t n = g.rows();
  std::vector<ComplexVector> cols;
  for (std::size_t c = 0; c < g.cols(); ++c) {
    ComplexVector v = g.col(c);
    for (int pass = 0; pass < 2; ++pass) {
      for (const ComplexVector& q : cols) {
        const Complex proj = inner(q, v);
        for (std::size_t r = 0; r < n; ++r) v[r] -= proj * q[r];
      }
    }
    const double nv = norm(v);
    if (nv < 1e-12) throw InternalError("random unitary: rank-deficient Gaussian sample");
    for (Complex& z : v) z /= nv;
    cols.push_back(std::move(v));
  }
  ComplexMatrix q(n, g.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < n; ++r) q(r, c) = cols[c][r];
  }
  return q;
}

}  // namespace detail

/// Seeded Haar-random unitary, resampled until it passes ufl_check.
/// Uses std::mt19937_64; identical seeds give bit-identical matrices.
inline UflUnitary random_ufl(std::size_t n, std::uint64_t seed, double floor = kUflFloor) {
  if (n < 2) throw DomainError("random_ufl: n must be at least 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ComplexMatrix g(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        g(r, c) = Complex{re, im};
      }
    }
    ComplexMatrix q = detail::orthonormalize_columns(g);
    if (is_unitary(q) && ufl_check(q, floor)) return UflUnitary::make(std::move(q), floor);
  }
  throw InternalError("random_ufl: no admissible sample in 1000 attempts");
}

/// Named unitary families: "hadamard" (n = 2 only), "fourier", "random"
/// (seeded by the caller's seed) and "random:<seed>".
class UnitarySource {
 public:
  enum class Kind { Hadamard, Fourier, Random };

  static UnitarySource parse(std::string_view spec, std::uint64_t default_seed = 0) {
    if (spec == "hadamard") return UnitarySource(Kind::Hadamard, 0);
    if (spec == "fourier") return UnitarySource(Kind::Fourier, 0);
    if (spec == "random") return UnitarySource(Kind::Random, default_seed);
    if (spec.starts_with("random:")) {
      const std::string digits(spec.substr(7));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("unitary source: bad seed in '" + std::string(spec) + "'");
      }
      try {
        return UnitarySource(Kind::Random, std::stoull(digits));
      } catch (const std::exception&) {
        throw InputError("unitary source: seed out of range in '" + std::string(spec) + "'");
      }
    }
    throw InputError("unknown unitary source '" + std::string(spec) +
                     "' (expected hadamard, fourier, random or random:<seed>)");
  }

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }

  /// The `index`-th unitary of size n drawn from this source. Deterministic.
  UflUnitary draw(std::size_t n, std::uint64_t index = 0, double floor = kUflFloor) const {
    switch (kind_) {
      case Kind::Hadamard:
        if (n != 2) {
          throw DomainError("unitary source 'hadamard' only provides n = 2 (requested n = " +
                            std::to_string(n) + ")");
        }
        return UflUnitary::make(hadamard2(), floor);
      case Kind::Fourier:
        return UflUnitary::make(fourier(n), floor);
      case Kind::Random: {
        std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                          static_cast<std::uint32_t>(n)};
        std::uint32_t raw[2];
        seq.generate(raw, raw + 2);
        return random_ufl(n, (std::uint64_t{raw[0]} << 32) | raw[1], floor);
      }
    }
    throw InternalError("UnitarySource: unreachable");
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::Hadamard: return "hadamard";
      case Kind::Fourier: return "fourier";
      case Kind::Random: return "random:" + std::to_string(seed_);
    }
    return "?";
  }

 private:
  UnitarySource(Kind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}
  Kind kind_;
  std::uint64_t seed_;
};

namespace detail {

inline ComplexMatrix extension(const UflUnitary& h, const OrderedBasis& basis, std::size_t offset) {
  const std::size_t n = basis.dim();
  if (h.n() + 1 != n) {
    throw DimensionError("extension: unitary of size " + std::to_string(h.n()) +
                         " needs a basis of dim " + std::to_string(h.n() + 1) + ", got " +
                         std::to_string(n));
  }
  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < h.n(); ++j) {
    for (std::size_t k = 0; k < h.n(); ++k) out(basis[j + offset], basis[k + offset]) = h.matrix()(j, k);
  }
  return out;
}

}  // namespace detail

/// sum_{j,k < n-1} h_jk |j><k| in the ordered basis: block [[H, 0], [0, 0]].
inline ComplexMatrix up_extension(const UflUnitary& h, const OrderedBasis& basis) {
  return detail::extension(h, basis, 0);
}

/// sum_{j,k < n-1} h_jk |j+1><k+1| in the ordered basis: block [[0, 0], [0, H]].
inline ComplexMatrix down_extension(const UflUnitary& h, const OrderedBasis& basis) {
  return detail::extension(h, basis, 1);
}

}  // namespace gnl
