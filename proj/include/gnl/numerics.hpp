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

// Small dense complex/real linear algebra used throughout the library.
//
// Matrices are row-major value types. The only heavy routine is the real
// null-space computation, which runs an SVD (Eigen) and applies the rank rule
//
//     sigma counts as zero  <=>  sigma <= tol * max(1, sigma_max).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "gnl/errors.hpp"

namespace gnl {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

inline constexpr double kDefaultTol = 1e-9;

class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
    check_shape();
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_shape();
    if (entries_.size() != rows_ * cols_) {
      throw DimensionError("ComplexMatrix: expected " + std::to_string(rows_ * cols_) +
                           " entries, got " + std::to_string(entries_.size()));
    }
    for (const Complex& z : entries_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InputError("ComplexMatrix: non-finite entry");
      }
    }
  }

  /// Row-by-row literal, e.g. `ComplexMatrix::from_rows({{1, 0}, {0, 1}})`.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Complex> flat;
    flat.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("ComplexMatrix::from_rows: ragged rows");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return ComplexMatrix(r, c, std::move(flat));
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix column(std::span<const Complex> v) {
    return ComplexMatrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  ComplexVector col(std::size_t c) const {
    ComplexVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("ComplexMatrix product: inner dimensions " + std::to_string(a.cols_) +
                           " and " + std::to_string(b.rows_));
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
    if (a.cols_ != v.size()) throw DimensionError("ComplexMatrix * vector: length mismatch");
    ComplexVector out(a.rows_, Complex{});
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    }
    return out;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void check_shape() const {
    if (rows_ == 0 || cols_ == 0) throw DimensionError("ComplexMatrix: dimensions must be positive");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

/// Largest entrywise modulus of `a - b`.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

inline double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw DimensionError("max_abs_diff: length mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

inline ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out;
  out.reserve(a.size() * b.size());
  for (const Complex& x : a) {
    for (const Complex& y : b) out.push_back(x * y);
  }
  return out;
}

/// <a|b>, conjugate-linear in `a`.
inline Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw DimensionError("inner: lengths " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

inline double norm(std::span<const Complex> v) {
  double acc = 0.0;
  for (const Complex& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

inline bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTol) {
  if (!u.is_square()) {
    throw DimensionError("is_unitary: matrix is " + std::to_string(u.rows()) + "x" +
                         std::to_string(u.cols()));
  }
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) <= tol;
}

/// Homogeneous real system A v = 0, stored row-major.
class RealLinearSystem {
 public:
  explicit RealLinearSystem(std::size_t unknowns) : unknowns_(unknowns) {
    if (unknowns_ == 0) throw DimensionError("RealLinearSystem: unknown count must be positive");
  }

  RealLinearSystem(std::size_t unknowns, std::size_t equations, std::vector<double> coefficients)
      : unknowns_(unknowns), coefficients_(std::move(coefficients)) {
    if (unknowns_ == 0) throw DimensionError("RealLinearSystem: unknown count must be positive");
    if (coefficients_.size() != unknowns_ * equations) {
      throw DimensionError("RealLinearSystem: coefficient count does not match shape");
    }
    for (double c : coefficients_) {
      if (!std::isfinite(c)) throw InputError("RealLinearSystem: non-finite coefficient");
    }
  }

  void add_equation(std::span<const double> row) {
    if (row.size() != unknowns_) throw DimensionError("RealLinearSystem: row length mismatch");
    for (double c : row) {
      if (!std::isfinite(c)) throw InputError("RealLinearSystem: non-finite coefficient");
    }
    coefficients_.insert(coefficients_.end(), row.begin(), row.end());
  }

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return coefficients_.size() / unknowns_; }
  double operator()(std::size_t r, std::size_t c) const { return coefficients_[r * unknowns_ + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(coefficients_).subspan(r * unknowns_, unknowns_);
  }

  RealVector apply(std::span<const double> v) const {
    if (v.size() != unknowns_) throw DimensionError("RealLinearSystem::apply: length mismatch");
    RealVector out(equations(), 0.0);
    for (std::size_t r = 0; r < out.size(); ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < unknowns_; ++c) acc += (*this)(r, c) * v[c];
      out[r] = acc;
    }
    return out;
  }

  /// Spectral norm (largest singular value); 0 for an empty system.
  double spectral_norm() const;

 private:
  friend struct NullSpaceSolver;
  std::size_t unknowns_;
  std::vector<double> coefficients_;
};

struct NullSpaceResult {
  std::vector<RealVector> basis;  // orthonormal
  std::size_t rank = 0;
  std::vector<double> singular_values;  // descending
};

struct NullSpaceSolver {
  static NullSpaceResult solve(const RealLinearSystem& sys, double tol) {
    const std::size_t n = sys.unknowns_;
    const std::size_t m = sys.equations();
    NullSpaceResult result;
    if (m == 0) {
      for (std::size_t k = 0; k < n; ++k) {
        RealVector e(n, 0.0);
        e[k] = 1.0;
        result.basis.push_back(std::move(e));
      }
      return result;
    }
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMajor> a(sys.coefficients_.data(), static_cast<Eigen::Index>(m),
                                 static_cast<Eigen::Index>(n));
    // Eigen 3.4.0's BDCSVD can return a non-orthogonal full V when many
    // singular values vanish; the Jacobi variant does not.
    Eigen::MatrixXd dense = a;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(dense, Eigen::ComputeFullV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    const double threshold = tol * std::max(1.0, sigma_max);
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      result.singular_values.push_back(sigma(i));
      if (sigma(i) > threshold) ++result.rank;
    }
    const Eigen::MatrixXd& v = svd.matrixV();
    for (std::size_t c = result.rank; c < n; ++c) {
      RealVector col(n);
      for (std::size_t r = 0; r < n; ++r) {
        col[r] = v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      }
      result.basis.push_back(std::move(col));
    }
    return result;
  }
};

inline double RealLinearSystem::spectral_norm() const {
  if (equations() == 0) return 0.0;
  auto sv = NullSpaceSolver::solve(*this, 0.0).singular_values;
  return sv.empty() ? 0.0 : sv.front();
}

/// Orthonormal basis of {v : A v = 0}; empty means the kernel is trivial.
inline std::vector<RealVector> null_space(const RealLinearSystem& sys, double tol = kDefaultTol) {
  return NullSpaceSolver::solve(sys, tol).basis;
}

/// Rank under the same singular-value threshold as null_space.
inline std::size_t numerical_rank(const RealLinearSystem& sys, double tol = kDefaultTol) {
  return NullSpaceSolver::solve(sys, tol).rank;
}

// Hermitian <-> real vector. Layout for a d x d matrix M:
//   [M00, M11, ..., M(d-1)(d-1),  Re M01, Im M01, Re M02, Im M02, ..., Re M(d-2)(d-1), Im ...]
// i.e. the d real diagonal entries, then one (re, im) pair per upper-triangular
// entry in row-major order.

inline std::size_t herm_offdiag_slot(std::size_t d, std::size_t a, std::size_t b) {
  // a < b; rows before `a` contribute (d-1) + (d-2) + ... + (d-a) entries.
  const std::size_t before = a * d - a * (a + 1) / 2;
  return d + 2 * (before + (b - a - 1));
}

inline RealVector herm_to_vec(const ComplexMatrix& m, double tol = kDefaultTol) {
  if (!m.is_square()) throw DimensionError("herm_to_vec: matrix is not square");
  const std::size_t d = m.rows();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      if (std::abs(m(a, b) - std::conj(m(b, a))) > tol) {
        throw DimensionError("herm_to_vec: matrix is not Hermitian at (" + std::to_string(a) +
                             ", " + std::to_string(b) + ")");
      }
    }
  }
  RealVector v(d * d, 0.0);
  for (std::size_t a = 0; a < d; ++a) v[a] = m(a, a).real();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      const std::size_t s = herm_offdiag_slot(d, a, b);
      v[s] = m(a, b).real();
      v[s + 1] = m(a, b).imag();
    }
  }
  return v;
}

inline ComplexMatrix vec_to_herm(std::span<const double> v, std::size_t d) {
  if (v.size() != d * d) {
    throw DimensionError("vec_to_herm: expected " + std::to_string(d * d) + " reals, got " +
                         std::to_string(v.size()));
  }
  ComplexMatrix m(d, d);
  for (std::size_t a = 0; a < d; ++a) m(a, a) = v[a];
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      const std::size_t s = herm_offdiag_slot(d, a, b);
      m(a, b) = Complex{v[s], v[s + 1]};
      m(b, a) = Complex{v[s], -v[s + 1]};
    }
  }
  return m;
}

}  // namespace gnl
