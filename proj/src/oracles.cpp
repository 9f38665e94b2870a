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

#include "sepcrit/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "sepcrit/pure_criterion.hpp"

namespace sepcrit {

namespace {

const Complex kI{0.0, 1.0};

CMatrix sigma_y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool is_two_qubit(const SubsystemDims& dims) {
  return dims.parties() == 2 && dims[0] == 2 && dims[1] == 2;
}

CMatrix psd_sqrt(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()));
  const RVector ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.cast<Complex>().asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

std::vector<double> flattening_second_singular_values(const PureState& state) {
  std::vector<double> out;
  for (std::size_t p = 0; p < state.dims().parties(); ++p) {
    const CMatrix m = matricize(state, p);
    const RVector sv = Eigen::JacobiSVD<CMatrix>(m).singularValues();
    out.push_back(sv.size() > 1 ? sv[1] : 0.0);
  }
  return out;
}

bool is_product(const PureState& state, double tol) {
  const auto sv = flattening_second_singular_values(state);
  return std::all_of(sv.begin(), sv.end(), [tol](double s) { return s <= tol; });
}

double wootters_pure(const PureState& state) {
  if (!is_two_qubit(state.dims())) {
    throw Error("wootters_pure: requires dims 2x2, got " + state.dims().to_string());
  }
  const CMatrix yy = kron(sigma_y(), sigma_y());
  const CVector& a = state.amplitudes();
  return std::abs((a.transpose() * yy * a)(0, 0));
}

double wootters_mixed(const DensityMatrix& rho) {
  if (!is_two_qubit(rho.dims())) {
    throw Error("wootters_mixed: requires dims 2x2, got " + rho.dims().to_string());
  }
  // Singular values of sqrt(rho) sqrt(rho~) are the square roots of the
  // eigenvalues of rho rho~, rho~ = (Y x Y) rho* (Y x Y).
  const CMatrix yy = kron(sigma_y(), sigma_y());
  const CMatrix s = psd_sqrt(rho.matrix());
  const CMatrix s_tilde = yy * s.conjugate() * yy;
  const RVector l = Eigen::JacobiSVD<CMatrix>(s * s_tilde).singularValues();
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

DecompositionSampler::DecompositionSampler(std::uint64_t seed, std::size_t count,
                                           std::size_t columns)
    : seed_(seed), count_(count), columns_(columns) {
  if (count_ == 0) throw Error("DecompositionSampler: count must be positive");
}

std::size_t DecompositionSampler::columns_for_rank(std::size_t r) const {
  if (columns_ == 0) return std::min(2 * r, r + 4);
  return std::max(columns_, r);
}

CMatrix DecompositionSampler::right_unitary(std::size_t r, std::size_t index) const {
  const auto k = static_cast<Eigen::Index>(columns_for_rank(r));
  std::seed_seq seq{static_cast<std::uint32_t>(seed_),
                    static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  CMatrix g(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < k; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(k, k);
  // Haar measure needs the phases of diag(R) absorbed into Q.
  const CMatrix& rmat = qr.matrixQR();
  for (Eigen::Index j = 0; j < k; ++j) {
    const Complex d = rmat(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q.topRows(static_cast<Eigen::Index>(r));
}

Ensemble decompose(const SpectralDecomposition& spec, const CMatrix& t) {
  if (static_cast<std::size_t>(t.rows()) != spec.rank()) {
    throw Error("decompose: T has " + std::to_string(t.rows()) + " rows, rank is " +
                std::to_string(spec.rank()));
  }
  const CMatrix cols = spec.eigenvectors *
                       spec.eigenvalues.cwiseSqrt().cast<Complex>().asDiagonal() * t;
  Ensemble e;
  for (Eigen::Index k = 0; k < cols.cols(); ++k) {
    const double n = cols.col(k).norm();
    e.weights.push_back(n * n);
    e.states.push_back(n > 0.0 ? CVector(cols.col(k) / n) : CVector());
  }
  return e;
}

double roof_upper_bound(const DensityMatrix& rho, const OperatorFamily& family,
                        const DecompositionSampler& sampler) {
  if (!(rho.dims() == family.dims)) {
    throw Error("roof_upper_bound: dims mismatch");
  }
  const auto spec = spectral(rho);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < sampler.count(); ++s) {
    const auto ens = decompose(spec, sampler.right_unitary(spec.rank(), s));
    double avg = 0.0;
    for (std::size_t k = 0; k < ens.weights.size(); ++k) {
      if (ens.weights[k] == 0.0) continue;
      avg += ens.weights[k] *
             c_pure(make_pure(rho.dims(), ens.states[k]), family).total;
    }
    best = std::min(best, avg);
  }
  return best;
}

double cube_function(const Cube& sub) {
  const CMatrix y = sigma_y();
  const CMatrix id = CMatrix::Identity(2, 2);
  CMatrix iv(2, 2);
  iv << 0.0, 1.0, 1.0, 0.0;
  const std::array<CMatrix, 6> s = {
      -kron(kron(y, y), id),  -kron(kron(y, id), y), -kron(kron(id, y), y),
      -kron(kron(iv, y), y),  -kron(kron(y, iv), y), -kron(kron(y, y), iv),
  };
  const Eigen::Map<const CVector> t(sub.data(), 8);
  double sum = 0.0;
  for (const auto& m : s) sum += std::norm((t.transpose() * m * t)(0, 0));
  return std::sqrt(sum) / std::sqrt(3.0);
}

std::size_t compound_tensor_c2_size(const SubsystemDims& dims) {
  std::size_t n = 1;
  for (std::size_t p = 0; p < dims.parties(); ++p) {
    n *= static_cast<std::size_t>(dims[p]) * static_cast<std::size_t>(dims[p] - 1) / 2;
  }
  return n;
}

double compound_tensor_c2(const PureState& state) {
  const auto& dims = state.dims();
  if (dims.parties() != 3) {
    throw Error("compound_tensor_c2: requires 3 subsystems, got " +
                std::to_string(dims.parties()));
  }
  auto pairs = [](int n) {
    std::vector<std::array<int, 2>> out;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) out.push_back({a, b});
    }
    return out;
  };
  const auto pi = pairs(dims[0]);
  const auto pj = pairs(dims[1]);
  const auto pk = pairs(dims[2]);
  double best = 0.0;
  for (const auto& i : pi) {
    for (const auto& j : pj) {
      for (const auto& k : pk) {
        Cube sub;
        for (int x = 0; x < 2; ++x) {
          for (int y = 0; y < 2; ++y) {
            for (int z = 0; z < 2; ++z) {
              const std::array<int, 3> d{i[x], j[y], k[z]};
              sub[static_cast<std::size_t>(4 * x + 2 * y + z)] = state[dims.flatten(d)];
            }
          }
        }
        best = std::max(best, cube_function(sub));
      }
    }
  }
  return best;
}

CMatrix partial_transpose(const DensityMatrix& rho,
                          const std::vector<std::size_t>& subsystems) {
  const auto& dims = rho.dims();
  const std::size_t n = dims.parties();
  std::vector<bool> mark(n, false);
  for (auto p : subsystems) {
    if (p >= n) {
      throw Error("bipartition: subsystem " + std::to_string(p) + " out of range");
    }
    if (mark[p]) throw Error("bipartition: subsystem " + std::to_string(p) + " repeated");
    mark[p] = true;
  }
  if (subsystems.empty() || subsystems.size() == n) {
    throw Error("bipartition: transposed side must be a nonempty proper subset");
  }
  const std::size_t d = dims.total();
  CMatrix out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < d; ++r) {
    const auto dr = dims.digits(r);
    for (std::size_t c = 0; c < d; ++c) {
      auto a = dr;
      auto b = dims.digits(c);
      for (std::size_t p = 0; p < n; ++p) {
        if (mark[p]) std::swap(a[p], b[p]);
      }
      out(static_cast<Eigen::Index>(dims.flatten(a)), static_cast<Eigen::Index>(dims.flatten(b))) =
          rho.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

double ppt_min_eigenvalue(const DensityMatrix& rho,
                          const std::vector<std::size_t>& subsystems) {
  const CMatrix pt = partial_transpose(rho, subsystems);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (pt + pt.adjoint()),
                                            Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool ppt_check(const DensityMatrix& rho, const std::vector<std::size_t>& subsystems,
               double tol) {
  return ppt_min_eigenvalue(rho, subsystems) >= -tol;
}

}  // namespace sepcrit
