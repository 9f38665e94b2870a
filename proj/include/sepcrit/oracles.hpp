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

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sepcrit/operators.hpp"
#include "sepcrit/states.hpp"

// Reference checks that share no code path with the criteria they validate.

namespace sepcrit {

inline constexpr double kProductTol = 1e-10;
inline constexpr double kPptTol = 1e-10;

/// True iff every single-subsystem flattening has numerical rank one.
bool is_product(const PureState& state, double tol = kProductTol);

/// Second singular value of each single-subsystem flattening.
std::vector<double> flattening_second_singular_values(const PureState& state);

/// |psi^T (sigma_y x sigma_y) psi| for a two-qubit state.
double wootters_pure(const PureState& state);

/// Closed-form two-qubit concurrence max{0, l1 - l2 - l3 - l4}.
double wootters_mixed(const DensityMatrix& rho);

/// Haar-random r x K matrices with orthonormal rows, and the pure-state
/// ensembles {omega_k, psi_k} they induce from a spectral decomposition.
class DecompositionSampler {
 public:
  /// columns == 0 selects min(2r, r + 4).
  DecompositionSampler(std::uint64_t seed, std::size_t count, std::size_t columns = 0);

  [[nodiscard]] std::size_t count() const { return count_; }
  [[nodiscard]] std::size_t columns_for_rank(std::size_t r) const;

  /// Sample `index` of the stream; deterministic in (seed, r, index).
  [[nodiscard]] CMatrix right_unitary(std::size_t r, std::size_t index) const;

 private:
  std::uint64_t seed_;
  std::size_t count_;
  std::size_t columns_;
};

struct Ensemble {
  std::vector<double> weights;      // omega_k
  std::vector<CVector> states;      // unit psi_k; empty vector where omega_k == 0
};

/// Columns of Phi M^{1/2} T, split into weights and unit vectors.
Ensemble decompose(const SpectralDecomposition& spec, const CMatrix& t);

/// Minimum over sampled decompositions of sum_k omega_k |C(psi_k)|.
/// An upper bound on the convex roof, so never below the mixed criterion.
double roof_upper_bound(const DensityMatrix& rho, const OperatorFamily& family,
                        const DecompositionSampler& sampler);

using Cube = std::array<Complex, 8>;

/// Six bilinear forms of a 2x2x2 tensor built from sigma_y, I and Iv,
/// combined as sqrt(sum C^2) / sqrt(3). Input is not normalized.
double cube_function(const Cube& sub);

/// Maximum of cube_function over every 2x2x2 sub-tensor obtained by picking
/// two index values per axis. Requires N = 3.
double compound_tensor_c2(const PureState& state);

/// Number of sub-cubes compound_tensor_c2 visits.
std::size_t compound_tensor_c2_size(const SubsystemDims& dims);

/// Partial transpose over the listed subsystems.
CMatrix partial_transpose(const DensityMatrix& rho,
                          const std::vector<std::size_t>& subsystems);

/// True iff the partial transpose over `subsystems` has no eigenvalue
/// below -tol. `subsystems` must be a nonempty proper subset.
bool ppt_check(const DensityMatrix& rho, const std::vector<std::size_t>& subsystems,
               double tol = kPptTol);

/// Smallest eigenvalue of the partial transpose.
double ppt_min_eigenvalue(const DensityMatrix& rho,
                          const std::vector<std::size_t>& subsystems);

}  // namespace sepcrit
