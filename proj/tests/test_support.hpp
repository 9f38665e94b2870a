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

// Test-only reference constructions. Nothing here calls into the code paths
// it is used to check: dense Kronecker products are built from scratch and
// generator matrices are written out entry by entry.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/QR>

#include "sepcrit/states.hpp"

namespace sepcrit::testing {

inline std::mt19937_64 rng_for(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), 0x5eedu};
  return std::mt19937_64(seq);
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline CMatrix kron_all(const std::vector<CMatrix>& fs) {
  CMatrix acc = CMatrix::Ones(1, 1);
  for (const auto& f : fs) acc = kron(acc, f);
  return acc;
}

inline CMatrix sigma_y() {
  CMatrix m(2, 2);
  m << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
  return m;
}

inline CMatrix iv() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline CMatrix eye(int n) { return CMatrix::Identity(n, n); }

/// Antisymmetric plane generator, written out directly.
inline CMatrix gen(int n, int a, int b) {
  CMatrix m = CMatrix::Zero(n, n);
  m(a, b) = 1.0;
  m(b, a) = -1.0;
  return m;
}

inline CMatrix abs_gen(int n, int a, int b) {
  CMatrix m = CMatrix::Zero(n, n);
  m(a, b) = 1.0;
  m(b, a) = 1.0;
  return m;
}

/// a^T S a with a dense S.
inline Complex dense_form(const CVector& a, const CMatrix& s) {
  return (a.transpose() * s * a)(0, 0);
}

/// Haar-random real orthogonal n x n.
inline RMatrix random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  RMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<RMatrix> qr(g);
  RMatrix q = qr.householderQ() * RMatrix::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    if (qr.matrixQR()(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

/// Applies (x)_p O_p to a state.
inline PureState local_orthogonal(const PureState& s, const std::vector<RMatrix>& os) {
  std::vector<CMatrix> fs;
  for (const auto& o : os) fs.push_back(o.cast<Complex>());
  return PureState(s.dims(), kron_all(fs) * s.amplitudes());
}

/// Two-qubit closed form 2|a00 a11 - a01 a10|.
inline double two_qubit_concurrence(const CVector& a) {
  return 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]);
}

}  // namespace sepcrit::testing
