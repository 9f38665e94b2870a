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
#include <string>
#include <vector>

#include "sepcrit/states.hpp"

namespace sepcrit {

/// Rotation plane (a, b), a < b.
struct Plane {
  int a = 0;
  int b = 1;
  friend auto operator<=>(const Plane&, const Plane&) = default;
};

/// SO(n) generator for plane (a, b): +1 at (a, b), -1 at (b, a).
struct Generator {
  int dim = 2;
  Plane plane;

  [[nodiscard]] RMatrix matrix() const;
};

/// All n(n-1)/2 generators of SO(n), lexicographic by plane.
std::vector<Generator> so_generators(int n);

/// Slot kinds. The enumerator order is the canonical pattern order:
/// AbsGen < AntisymGen < Identity.
enum class FactorKind : std::uint8_t { AbsGen, AntisymGen, Identity };

struct Factor {
  FactorKind kind = FactorKind::Identity;
  Plane plane;  // ignored for Identity

  [[nodiscard]] RMatrix matrix(int dim) const;
  friend bool operator==(const Factor& x, const Factor& y) {
    return x.kind == y.kind &&
           (x.kind == FactorKind::Identity || x.plane == y.plane);
  }
};

/// One nonzero of a family operator: S(row, col) = sign.
struct SignedEntry {
  std::uint32_t row;
  std::uint32_t col;
  std::int8_t sign;
};

/// L (x) L (x) |L| (x) ... (x) I, one factor per subsystem.
///
/// Every such operator is a signed partial permutation matrix, so it is
/// stored as its nonzero list; `materialize` gives the dense form.
struct SOperator {
  std::vector<Factor> factors;
  std::size_t abs_count = 0;  // number of AbsGen slots
  std::size_t total_dim = 0;  // D
  std::vector<SignedEntry> entries;

  /// Slot kinds only, e.g. "|L|,L,L".
  [[nodiscard]] std::string pattern() const;
  /// Kinds with planes, e.g. "|L|(0,1) x L(0,1) x I".
  [[nodiscard]] std::string tag() const;
};

struct OperatorFamily {
  SubsystemDims dims;
  std::vector<SOperator> operators;
  double normalization = 1.0;  // 1 / sqrt(N(N-1)/2)

  [[nodiscard]] std::size_t size() const { return operators.size(); }
};

/// Every operator with two AntisymGen slots, i AbsGen slots (0 <= i <= N-2)
/// and Identity elsewhere, over all slot placements and planes. Ordered by i,
/// then slot pattern, then planes.
OperatorFamily enumerate_family(const SubsystemDims& dims);

/// Sum over slot patterns of the product of n_p(n_p-1)/2 over non-identity slots.
std::size_t family_size_closed_form(const SubsystemDims& dims);

/// Dense D x D Kronecker product of the factors.
RMatrix materialize(const SOperator& op, const SubsystemDims& dims);

/// S * v using the nonzero list.
CVector apply_operator(const SOperator& op, const CVector& v);
CMatrix apply_operator(const SOperator& op, const CMatrix& m);

}  // namespace sepcrit
