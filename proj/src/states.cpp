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

#include "sepcrit/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace sepcrit {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

SubsystemDims::SubsystemDims(std::vector<int> dims, std::size_t max_total)
    : dims_(std::move(dims)) {
  if (dims_.size() < 2) {
    throw Error("dims: need at least 2 subsystems, got " +
                std::to_string(dims_.size()));
  }
  for (std::size_t p = 0; p < dims_.size(); ++p) {
    if (dims_[p] < 2) {
      throw Error("dims[" + std::to_string(p) + "] = " +
                  std::to_string(dims_[p]) + ": every local dimension must be >= 2");
    }
    total_ *= static_cast<std::size_t>(dims_[p]);
    if (total_ > max_total) {
      throw Error("dims: total dimension exceeds cap " + std::to_string(max_total));
    }
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t p = dims_.size() - 1; p-- > 0;) {
    strides_[p] = strides_[p + 1] * static_cast<std::size_t>(dims_[p + 1]);
  }
}

std::vector<int> SubsystemDims::digits(std::size_t flat) const {
  std::vector<int> out(dims_.size());
  for (std::size_t p = dims_.size(); p-- > 0;) {
    out[p] = static_cast<int>(flat % static_cast<std::size_t>(dims_[p]));
    flat /= static_cast<std::size_t>(dims_[p]);
  }
  return out;
}

std::size_t SubsystemDims::flatten(std::span<const int> digits) const {
  std::size_t flat = 0;
  for (std::size_t p = 0; p < dims_.size(); ++p) {
    flat += static_cast<std::size_t>(digits[p]) * strides_[p];
  }
  return flat;
}

std::string SubsystemDims::to_string() const {
  std::string s;
  for (std::size_t p = 0; p < dims_.size(); ++p) {
    if (p) s += 'x';
    s += std::to_string(dims_[p]);
  }
  return s;
}

PureState::PureState(SubsystemDims dims, CVector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != dims_.total()) {
    throw Error("amplitudes: expected length " + std::to_string(dims_.total()) +
                " for dims " + dims_.to_string() + ", got " +
                std::to_string(amplitudes_.size()));
  }
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm)) throw Error("amplitudes: non-finite entries");
  if (std::abs(norm - 1.0) > 1e-12) {
    throw Error("amplitudes: norm " + fmt_double(norm) + " is not 1");
  }
}

CMatrix PureState::projector() const {
  return amplitudes_ * amplitudes_.adjoint();
}

DensityMatrix::DensityMatrix(SubsystemDims dims, CMatrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(dims_.total());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw Error("density matrix: expected " + std::to_string(d) + "x" +
                std::to_string(d) + " for dims " + dims_.to_string() + ", got " +
                std::to_string(matrix_.rows()) + "x" +
                std::to_string(matrix_.cols()));
  }
  if (!matrix_.allFinite()) throw Error("density matrix: non-finite entries");
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw Error("density matrix: not Hermitian (max |rho - rho^dagger| = " +
                fmt_double(herm) + ")");
  }
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw Error("density matrix: trace " + fmt_double(trace) +
                " deviates from 1 by " + fmt_double(std::abs(trace - 1.0)));
  }
  // Eigenvalues of the Hermitian part; the anti-Hermitian residue is below tolerance.
  const CMatrix h = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kNegativeEigTol) {
    throw Error("density matrix: negative eigenvalue " + fmt_double(min_eig));
  }
}

CMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

PureState make_pure(const SubsystemDims& dims, const CVector& raw) {
  if (static_cast<std::size_t>(raw.size()) != dims.total()) {
    throw Error("amplitudes: expected length " + std::to_string(dims.total()) +
                " for dims " + dims.to_string() + ", got " +
                std::to_string(raw.size()));
  }
  const double norm = raw.norm();
  if (!std::isfinite(norm)) throw Error("amplitudes: non-finite entries");
  if (norm == 0.0) throw Error("amplitudes: zero vector cannot be normalized");
  return PureState(dims, raw / norm);
}

PureState make_pure(const std::vector<int>& dims,
                    const std::vector<Complex>& raw) {
  return make_pure(SubsystemDims(dims),
                   Eigen::Map<const CVector>(raw.data(),
                                             static_cast<Eigen::Index>(raw.size())));
}

DensityMatrix make_density(const PureState& state) {
  return DensityMatrix(state.dims(), state.projector());
}

PureState product_state(const std::vector<CVector>& factors) {
  std::vector<int> dims;
  CVector acc = CVector::Ones(1);
  for (const auto& f : factors) {
    const double n = f.norm();
    if (n == 0.0) throw Error("product_state: zero factor");
    dims.push_back(static_cast<int>(f.size()));
    CVector next(acc.size() * f.size());
    for (Eigen::Index i = 0; i < acc.size(); ++i) {
      next.segment(i * f.size(), f.size()) = acc[i] * f / n;
    }
    acc = std::move(next);
  }
  return make_pure(SubsystemDims(dims), acc);
}

CMatrix matricize(const PureState& state, std::size_t p) {
  const auto& dims = state.dims();
  if (p >= dims.parties()) {
    throw Error("matricize: subsystem " + std::to_string(p) + " out of range [0, " +
                std::to_string(dims.parties()) + ")");
  }
  const std::size_t np = static_cast<std::size_t>(dims[p]);
  const std::size_t stride = dims.stride(p);
  const std::size_t outer = dims.total() / (np * stride);
  CMatrix m(np, dims.total() / np);
  // Column index flattens the remaining digits row-major: (outer, inner).
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t s = 0; s < stride; ++s) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(o * stride + s)) =
            state[(o * np + i) * stride + s];
      }
    }
  }
  return m;
}

PureState unmatricize(const SubsystemDims& dims, std::size_t p,
                      const CMatrix& flat) {
  if (p >= dims.parties()) throw Error("unmatricize: subsystem out of range");
  const std::size_t np = static_cast<std::size_t>(dims[p]);
  if (static_cast<std::size_t>(flat.rows()) != np ||
      static_cast<std::size_t>(flat.cols()) != dims.total() / np) {
    throw Error("unmatricize: shape does not match dims " + dims.to_string());
  }
  const std::size_t stride = dims.stride(p);
  const std::size_t outer = dims.total() / (np * stride);
  CVector a(dims.total());
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t s = 0; s < stride; ++s) {
        a[(o * np + i) * stride + s] =
            flat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(o * stride + s));
      }
    }
  }
  return PureState(dims, std::move(a));
}

PureState permute_subsystems(const PureState& state,
                             std::span<const std::size_t> perm) {
  const auto& dims = state.dims();
  const std::size_t n = dims.parties();
  if (perm.size() != n) throw Error("permute_subsystems: wrong permutation length");
  std::vector<bool> seen(n, false);
  std::vector<int> new_dims(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (perm[q] >= n || seen[perm[q]]) {
      throw Error("permute_subsystems: not a permutation");
    }
    seen[perm[q]] = true;
    new_dims[q] = dims[perm[q]];
  }
  SubsystemDims out_dims(new_dims);
  CVector a(dims.total());
  std::vector<int> nd(n);
  for (std::size_t flat = 0; flat < dims.total(); ++flat) {
    const auto d = dims.digits(flat);
    for (std::size_t q = 0; q < n; ++q) nd[q] = d[perm[q]];
    a[static_cast<Eigen::Index>(out_dims.flatten(nd))] = state[flat];
  }
  return PureState(out_dims, std::move(a));
}

SpectralDecomposition spectral(const DensityMatrix& rho, double trunc_tol) {
  const CMatrix& m = rho.matrix();
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw Error("spectral: input not Hermitian (deviation " + fmt_double(herm) + ")");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success) {
    throw NumericalError("spectral: eigendecomposition failed");
  }
  const RVector& ev = es.eigenvalues();  // ascending
  if (ev.minCoeff() < -kNegativeEigTol) {
    throw Error("spectral: negative eigenvalue " + fmt_double(ev.minCoeff()));
  }
  const double cutoff = trunc_tol * m.trace().real();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = ev.size(); i-- > 0;) {
    if (ev[i] > cutoff) keep.push_back(i);
  }
  if (keep.empty()) throw NumericalError("spectral: no eigenvalue above cutoff");

  SpectralDecomposition out;
  out.eigenvalues.resize(static_cast<Eigen::Index>(keep.size()));
  out.eigenvectors.resize(m.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const auto col = static_cast<Eigen::Index>(c);
    out.eigenvalues[col] = ev[keep[c]];
    out.eigenvectors.col(col) = es.eigenvectors().col(keep[c]);
  }
  return out;
}

}  // namespace sepcrit
