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

#include "sepcrit/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace sepcrit {

namespace {

std::string kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::AbsGen: return "|L|";
    case FactorKind::AntisymGen: return "L";
    case FactorKind::Identity: return "I";
  }
  return "?";
}

std::size_t generator_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

// Nonzeros of the Kronecker product: walk every flat row, keep rows whose
// digits sit in the plane of each non-identity slot, flip those digits.
std::vector<SignedEntry> build_entries(const std::vector<Factor>& factors,
                                       const SubsystemDims& dims) {
  std::vector<SignedEntry> out;
  const std::size_t n = dims.parties();
  for (std::size_t row = 0; row < dims.total(); ++row) {
    const auto d = dims.digits(row);
    std::size_t col = row;
    int sign = 1;
    bool hit = true;
    for (std::size_t p = 0; p < n && hit; ++p) {
      const auto& f = factors[p];
      if (f.kind == FactorKind::Identity) continue;
      const std::size_t s = dims.stride(p);
      if (d[p] == f.plane.a) {
        col += static_cast<std::size_t>(f.plane.b - f.plane.a) * s;
      } else if (d[p] == f.plane.b) {
        col -= static_cast<std::size_t>(f.plane.b - f.plane.a) * s;
        if (f.kind == FactorKind::AntisymGen) sign = -sign;
      } else {
        hit = false;
      }
    }
    if (hit) {
      out.push_back({static_cast<std::uint32_t>(row),
                     static_cast<std::uint32_t>(col),
                     static_cast<std::int8_t>(sign)});
    }
  }
  return out;
}

}  // namespace

RMatrix Generator::matrix() const {
  RMatrix m = RMatrix::Zero(dim, dim);
  m(plane.a, plane.b) = 1.0;
  m(plane.b, plane.a) = -1.0;
  return m;
}

std::vector<Generator> so_generators(int n) {
  if (n < 2) throw Error("so_generators: n must be >= 2, got " + std::to_string(n));
  std::vector<Generator> gens;
  gens.reserve(generator_count(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) gens.push_back({n, {a, b}});
  }
  return gens;
}

RMatrix Factor::matrix(int dim) const {
  switch (kind) {
    case FactorKind::Identity: return RMatrix::Identity(dim, dim);
    case FactorKind::AntisymGen: return Generator{dim, plane}.matrix();
    case FactorKind::AbsGen: return Generator{dim, plane}.matrix().cwiseAbs();
  }
  return {};
}

std::string SOperator::pattern() const {
  std::string s;
  for (std::size_t p = 0; p < factors.size(); ++p) {
    if (p) s += ',';
    s += kind_name(factors[p].kind);
  }
  return s;
}

std::string SOperator::tag() const {
  std::string s;
  for (std::size_t p = 0; p < factors.size(); ++p) {
    if (p) s += " x ";
    const auto& f = factors[p];
    s += kind_name(f.kind);
    if (f.kind != FactorKind::Identity) {
      s += "(" + std::to_string(f.plane.a) + "," + std::to_string(f.plane.b) + ")";
    }
  }
  return s;
}

OperatorFamily enumerate_family(const SubsystemDims& dims) {
  const std::size_t n = dims.parties();
  OperatorFamily family{dims, {}, 1.0 / std::sqrt(0.5 * double(n) * double(n - 1))};

  for (std::size_t abs_count = 0; abs_count + 2 <= n; ++abs_count) {
    // Slot patterns with 2 AntisymGen, abs_count AbsGen, rest Identity,
    // visited in lexicographic order of the kind sequence.
    std::vector<FactorKind> kinds;
    kinds.insert(kinds.end(), abs_count, FactorKind::AbsGen);
    kinds.insert(kinds.end(), 2, FactorKind::AntisymGen);
    kinds.insert(kinds.end(), n - 2 - abs_count, FactorKind::Identity);
    do {
      std::vector<std::size_t> active;
      for (std::size_t p = 0; p < n; ++p) {
        if (kinds[p] != FactorKind::Identity) active.push_back(p);
      }
      std::vector<std::vector<Generator>> gens;
      for (auto p : active) gens.push_back(so_generators(dims[p]));

      // Odometer over plane choices, first active slot slowest.
      std::vector<std::size_t> pick(active.size(), 0);
      while (true) {
        SOperator op;
        op.abs_count = abs_count;
        op.total_dim = dims.total();
        op.factors.resize(n);
        for (std::size_t p = 0; p < n; ++p) op.factors[p].kind = kinds[p];
        for (std::size_t k = 0; k < active.size(); ++k) {
          op.factors[active[k]].plane = gens[k][pick[k]].plane;
        }
        op.entries = build_entries(op.factors, dims);
        family.operators.push_back(std::move(op));

        bool wrapped = true;
        for (std::size_t k = active.size(); k-- > 0;) {
          if (++pick[k] < gens[k].size()) {
            wrapped = false;
            break;
          }
          pick[k] = 0;
        }
        if (wrapped) break;
      }
    } while (std::next_permutation(kinds.begin(), kinds.end()));
  }
  return family;
}

std::size_t family_size_closed_form(const SubsystemDims& dims) {
  const std::size_t n = dims.parties();
  std::size_t total = 0;
  // Each slot is Identity (weight 1) or one of {AntisymGen, AbsGen}
  // (weight g_p); sum over assignments with exactly two AntisymGen.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::size_t w = 1;
    for (std::size_t p = 0; p < n; ++p) {
      if (mask >> p & 1) w *= generator_count(dims[p]);
    }
    const auto m = static_cast<std::size_t>(std::popcount(mask));
    total += w * m * (m - 1) / 2;  // choose which two active slots are L
  }
  return total;
}

RMatrix materialize(const SOperator& op, const SubsystemDims& dims) {
  if (op.factors.size() != dims.parties()) {
    throw Error("materialize: operator has " + std::to_string(op.factors.size()) +
                " factors, dims has " + std::to_string(dims.parties()));
  }
  for (std::size_t p = 0; p < dims.parties(); ++p) {
    const auto& f = op.factors[p];
    if (f.kind != FactorKind::Identity &&
        (f.plane.a < 0 || f.plane.a >= f.plane.b || f.plane.b >= dims[p])) {
      throw Error("materialize: plane out of range for subsystem " + std::to_string(p));
    }
  }
  RMatrix acc = RMatrix::Ones(1, 1);
  for (std::size_t p = 0; p < dims.parties(); ++p) {
    const RMatrix f = op.factors[p].matrix(dims[p]);
    RMatrix next(acc.rows() * f.rows(), acc.cols() * f.cols());
    for (Eigen::Index i = 0; i < acc.rows(); ++i) {
      for (Eigen::Index j = 0; j < acc.cols(); ++j) {
        next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = acc(i, j) * f;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

void check_rows(const SOperator& op, Eigen::Index rows) {
  if (static_cast<std::size_t>(rows) != op.total_dim) {
    throw Error("apply_operator: operand has " + std::to_string(rows) +
                " rows, operator acts on dimension " + std::to_string(op.total_dim));
  }
}

}  // namespace

CVector apply_operator(const SOperator& op, const CVector& v) {
  check_rows(op, v.size());
  CVector out = CVector::Zero(v.size());
  for (const auto& e : op.entries) out[e.row] += double(e.sign) * v[e.col];
  return out;
}

CMatrix apply_operator(const SOperator& op, const CMatrix& m) {
  check_rows(op, m.rows());
  CMatrix out = CMatrix::Zero(m.rows(), m.cols());
  for (const auto& e : op.entries) out.row(e.row) += double(e.sign) * m.row(e.col);
  return out;
}

}  // namespace sepcrit
