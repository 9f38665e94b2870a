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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sepcrit/operators.hpp"
#include "sepcrit/states.hpp"

namespace sepcrit {

inline constexpr double kDefaultMixedTol = 1e-7;

/// A_a = M^{1/2} Phi^T S_a Phi M^{1/2}, one r x r complex symmetric matrix
/// per family operator.
struct AMatrixSet {
  std::vector<CMatrix> mats;
  std::size_t rank = 0;
};

/// Domain of the weight vector z over which the singular-value gap is
/// maximized.
enum class WeightMode {
  /// z on the complex unit sphere, an independent phase per operator.
  Complex,
  /// z = y * e^{i phi} with y >= 0, unit norm; phi is a common phase and
  /// drops out of the singular values.
  NonnegativeCommonPhase,
};

struct OptimizerConfig {
  int restarts = 50;
  int max_evals = 2000;  // per restart
  double ftol = 1e-10;
  std::uint64_t seed = 0;
  WeightMode mode = WeightMode::Complex;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct OptimizationPoint {
  CVector weights;  // unit norm
  double objective = 0.0;
  RVector singular_values;  // decreasing
};

struct RestartResult {
  OptimizationPoint best;
  int evaluations = 0;
  bool converged = false;
};

struct MixedCriterionReport {
  double value = 0.0;  // max{0, best objective}
  OptimizationPoint best;
  std::size_t rank = 0;
  std::size_t family_size = 0;
  int restarts = 0;
  int evaluations = 0;
  int converged_restarts = 0;
  bool converged = false;  // the restart that produced `best` met ftol
  std::vector<double> restart_objectives;
  double tolerance = kDefaultMixedTol;
  bool separable = true;
};

AMatrixSet a_matrices(const SpectralDecomposition& spec,
                      const OperatorFamily& family);

/// Singular values of F(z) = normalization * sum_a z_a A_a, decreasing.
RVector gap_singular_values(const CVector& weights, const AMatrixSet& amats,
                            double normalization);

/// lambda_1 - sum_{i>1} lambda_i of F(z). `weights` need not be normalized;
/// it is scaled to unit norm first. Throws NumericalError on NaN.
double objective(const CVector& weights, const AMatrixSet& amats,
                 double normalization);
double objective(const RVector& weights, const AMatrixSet& amats,
                 double normalization);

/// One seeded local search. Deterministic in (config.seed, restart_index).
RestartResult run_restart(const AMatrixSet& amats, double normalization,
                          const OptimizerConfig& config, int restart_index);

MixedCriterionReport c_mixed(const AMatrixSet& amats, double normalization,
                             const OptimizerConfig& config = {},
                             double tol = kDefaultMixedTol);

MixedCriterionReport c_mixed(const DensityMatrix& rho,
                             const OperatorFamily& family,
                             const OptimizerConfig& config = {},
                             double tol = kDefaultMixedTol);

bool verdict_mixed(const DensityMatrix& rho, const OperatorFamily& family,
                   const OptimizerConfig& config = {},
                   double tol = kDefaultMixedTol);

}  // namespace sepcrit
