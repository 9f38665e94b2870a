// Copyright 2026 The sepcrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sepcrit {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Raised for invalid input: bad dimensions, malformed data, violated invariants.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a numerical routine produces NaN or otherwise fails.
class NumericalError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultMaxTotalDim = 4096;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNegativeEigTol = 1e-10;
inline constexpr double kDefaultTruncTol = 1e-12;

/// Ordered local dimensions n_1..n_N of a multipartite system.
///
/// Multi-indices are laid out row-major: the last subsystem's index varies
/// fastest, so amplitude (i, j, k) of an [n1, n2, n3] system lives at
/// offset (i * n2 + j) * n3 + k.
class SubsystemDims {
 public:
  explicit SubsystemDims(std::vector<int> dims,
                         std::size_t max_total = kDefaultMaxTotalDim);

  [[nodiscard]] std::size_t parties() const { return dims_.size(); }
  [[nodiscard]] int operator[](std::size_t p) const { return dims_[p]; }
  [[nodiscard]] std::size_t total() const { return total_; }
  [[nodiscard]] const std::vector<int>& values() const { return dims_; }

  /// Stride of subsystem p in the flat index.
  [[nodiscard]] std::size_t stride(std::size_t p) const { return strides_[p]; }

  /// Split a flat index into per-subsystem digits.
  [[nodiscard]] std::vector<int> digits(std::size_t flat) const;
  [[nodiscard]] std::size_t flatten(std::span<const int> digits) const;

  /// "2x2x3"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SubsystemDims& a, const SubsystemDims& b) {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

/// Unit-norm amplitude vector over SubsystemDims.
class PureState {
 public:
  PureState(SubsystemDims dims, CVector amplitudes);

  [[nodiscard]] const SubsystemDims& dims() const { return dims_; }
  [[nodiscard]] const CVector& amplitudes() const { return amplitudes_; }
  [[nodiscard]] Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  /// |psi><psi|
  [[nodiscard]] CMatrix projector() const;

 private:
  SubsystemDims dims_;
  CVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace matrix over SubsystemDims.
class DensityMatrix {
 public:
  /// Validates the matrix; throws Error naming the violated invariant.
  DensityMatrix(SubsystemDims dims, CMatrix matrix);

  [[nodiscard]] const SubsystemDims& dims() const { return dims_; }
  [[nodiscard]] const CMatrix& matrix() const { return matrix_; }

 private:
  SubsystemDims dims_;
  CMatrix matrix_;
};

/// rho = Phi * diag(eigenvalues) * Phi^dagger, truncated to the retained rank.
struct SpectralDecomposition {
  RVector eigenvalues;  // decreasing, all > trunc_tol * trace
  CMatrix eigenvectors; // D x r, orthonormal columns
  [[nodiscard]] std::size_t rank() const {
    return static_cast<std::size_t>(eigenvalues.size());
  }
  [[nodiscard]] CMatrix reconstruct() const;
};

/// Normalizing constructor. Throws on length mismatch or a zero vector.
PureState make_pure(const SubsystemDims& dims, const CVector& raw);
PureState make_pure(const std::vector<int>& dims,
                    const std::vector<Complex>& raw);

DensityMatrix make_density(const PureState& state);

/// Tensor product of single-subsystem vectors (each normalized first).
PureState product_state(const std::vector<CVector>& factors);

/// n_p x (D / n_p) flattening separating subsystem p (0-based) from the rest.
CMatrix matricize(const PureState& state, std::size_t p);

/// Inverse of matricize.
PureState unmatricize(const SubsystemDims& dims, std::size_t p,
                      const CMatrix& flat);

/// Reorder subsystems: new subsystem q is old subsystem perm[q].
PureState permute_subsystems(const PureState& state,
                             std::span<const std::size_t> perm);

SpectralDecomposition spectral(const DensityMatrix& rho,
                               double trunc_tol = kDefaultTruncTol);

}  // namespace sepcrit
