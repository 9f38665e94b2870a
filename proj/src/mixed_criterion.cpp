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

#include "sepcrit/mixed_criterion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "nelder_mead.hpp"

namespace sepcrit {

namespace {

// Search-space coordinates -> unit weight vector.
// Complex: x = (Re w, Im w), z = w / |w|.
// Nonnegative: y = x^2 / |x^2|.
CVector weights_from_params(const Eigen::VectorXd& x, std::size_t k, WeightMode mode) {
  const auto kk = static_cast<Eigen::Index>(k);
  CVector z(kk);
  if (mode == WeightMode::Complex) {
    for (Eigen::Index a = 0; a < kk; ++a) z[a] = Complex(x[a], x[a + kk]);
  } else {
    for (Eigen::Index a = 0; a < kk; ++a) z[a] = x[a] * x[a];
  }
  const double n = z.norm();
  if (n > 0.0) z /= n;
  return z;
}

CMatrix combine(const CVector& weights, const AMatrixSet& amats, double normalization) {
  const auto r = static_cast<Eigen::Index>(amats.rank);
  CMatrix f = CMatrix::Zero(r, r);
  for (std::size_t a = 0; a < amats.mats.size(); ++a) {
    f += weights[static_cast<Eigen::Index>(a)] * amats.mats[a];
  }
  return normalization * f;
}

double gap(const RVector& sv) {
  if (sv.size() == 0) return 0.0;
  return sv[0] - sv.tail(sv.size() - 1).sum();
}

// Search-loop objective: singular values as square roots of the eigenvalues
// of F^dagger F. Several times cheaper than an SVD; the absolute error on a
// singular value near zero is about sqrt(eps) * |F|, so reported optima are
// re-evaluated with gap_singular_values.
double fast_gap(const CVector& z, const AMatrixSet& amats, double normalization) {
  const CMatrix f = combine(z, amats, normalization);
  const CMatrix h = f.adjoint() * f;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  const RVector& mu = es.eigenvalues();  // increasing
  if (es.info() != Eigen::Success || !mu.allFinite()) {
    throw NumericalError("objective: eigensolver failed");
  }
  const Eigen::Index r = mu.size();
  double rest = 0.0;
  for (Eigen::Index i = 0; i + 1 < r; ++i) rest += std::sqrt(std::max(mu[i], 0.0));
  return std::sqrt(std::max(mu[r - 1], 0.0)) - rest;
}

void check_weights(const CVector& weights, const AMatrixSet& amats) {
  if (static_cast<std::size_t>(weights.size()) != amats.mats.size()) {
    throw Error("objective: weight vector has length " + std::to_string(weights.size()) +
                ", expected " + std::to_string(amats.mats.size()));
  }
}

}  // namespace

AMatrixSet a_matrices(const SpectralDecomposition& spec, const OperatorFamily& family) {
  const auto& phi = spec.eigenvectors;
  if (static_cast<std::size_t>(phi.rows()) != family.dims.total()) {
    throw Error("a_matrices: spectral decomposition has dimension " +
                std::to_string(phi.rows()) + ", family expects " +
                std::to_string(family.dims.total()));
  }
  const CMatrix phi_scaled =
      phi * spec.eigenvalues.cwiseSqrt().cast<Complex>().asDiagonal();
  AMatrixSet out;
  out.rank = spec.rank();
  out.mats.reserve(family.size());
  for (const auto& op : family.operators) {
    CMatrix a = phi_scaled.transpose() * apply_operator(op, phi_scaled);
    out.mats.push_back(std::move(a));
  }
  return out;
}

RVector gap_singular_values(const CVector& weights, const AMatrixSet& amats,
                            double normalization) {
  check_weights(weights, amats);
  const double n = weights.norm();
  const CVector z = n > 0.0 ? CVector(weights / n) : weights;
  const CMatrix f = combine(z, amats, normalization);
  if (!f.allFinite()) throw NumericalError("objective: non-finite weighted matrix");
  RVector sv;
  if (f.rows() <= 16) {
    sv = Eigen::JacobiSVD<CMatrix>(f).singularValues();
  } else {
    sv = Eigen::BDCSVD<CMatrix>(f).singularValues();
  }
  if (!sv.allFinite()) throw NumericalError("objective: SVD produced NaN");
  return sv;
}

double objective(const CVector& weights, const AMatrixSet& amats, double normalization) {
  return gap(gap_singular_values(weights, amats, normalization));
}

double objective(const RVector& weights, const AMatrixSet& amats, double normalization) {
  return objective(CVector(weights.cast<Complex>()), amats, normalization);
}

RestartResult run_restart(const AMatrixSet& amats, double normalization,
                          const OptimizerConfig& config, int restart_index) {
  const std::size_t k = amats.mats.size();
  if (k == 0) throw Error("c_mixed: empty operator family");
  const auto dim = static_cast<Eigen::Index>(config.mode == WeightMode::Complex ? 2 * k : k);

  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(restart_index)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  Eigen::VectorXd x0(dim);
  for (Eigen::Index i = 0; i < dim; ++i) x0[i] = normal(rng);

  auto neg_gap = [&](const Eigen::VectorXd& x) {
    return -fast_gap(weights_from_params(x, k, config.mode), amats, normalization);
  };

  RestartResult result;
  auto run = detail::nelder_mead(neg_gap, x0, 0.5, config.ftol, config.max_evals);
  result.evaluations = run.evaluations;
  Eigen::VectorXd best_x = run.x;
  double best_f = run.f;
  bool converged = run.converged;

  // Re-seed the simplex around the incumbent until a fresh simplex stops
  // improving; NM can stall on a degenerate simplex.
  double step = 0.1;
  while (result.evaluations < config.max_evals) {
    auto polish = detail::nelder_mead(neg_gap, best_x, step * std::max(1.0, best_x.norm()),
                                      config.ftol, config.max_evals - result.evaluations);
    result.evaluations += polish.evaluations;
    const bool improved = polish.f < best_f - config.ftol;
    if (polish.f < best_f) {
      best_f = polish.f;
      best_x = polish.x;
    }
    converged = polish.converged;
    if (!improved) break;
    step = std::max(step * 0.5, 1e-4);
  }

  result.converged = converged;
  result.best.weights = weights_from_params(best_x, k, config.mode);
  result.best.singular_values = gap_singular_values(result.best.weights, amats, normalization);
  result.best.objective = gap(result.best.singular_values);
  return result;
}

MixedCriterionReport c_mixed(const AMatrixSet& amats, double normalization,
                             const OptimizerConfig& config, double tol) {
  if (config.restarts < 1) throw Error("optimizer: restarts must be >= 1");
  if (config.max_evals < 1) throw Error("optimizer: evals must be >= 1");
  if (!(config.ftol >= 0.0)) throw Error("optimizer: ftol must be >= 0");

  const auto n = static_cast<std::size_t>(config.restarts);
  std::vector<RestartResult> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = run_restart(amats, normalization, config, static_cast<int>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(n));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  MixedCriterionReport report;
  report.rank = amats.rank;
  report.family_size = amats.mats.size();
  report.restarts = config.restarts;
  report.tolerance = tol;
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    report.evaluations += results[i].evaluations;
    report.converged_restarts += results[i].converged ? 1 : 0;
    report.restart_objectives.push_back(results[i].best.objective);
    if (results[i].best.objective > results[best].best.objective) best = i;
  }
  report.best = results[best].best;
  report.converged = results[best].converged;
  report.value = std::max(0.0, report.best.objective);
  report.separable = report.value <= tol;
  return report;
}

MixedCriterionReport c_mixed(const DensityMatrix& rho, const OperatorFamily& family,
                             const OptimizerConfig& config, double tol) {
  if (!(rho.dims() == family.dims)) {
    throw Error("c_mixed: state dims " + rho.dims().to_string() +
                " do not match family dims " + family.dims.to_string());
  }
  const auto spec = spectral(rho);
  return c_mixed(a_matrices(spec, family), family.normalization, config, tol);
}

bool verdict_mixed(const DensityMatrix& rho, const OperatorFamily& family,
                   const OptimizerConfig& config, double tol) {
  return c_mixed(rho, family, config, tol).separable;
}

}  // namespace sepcrit
