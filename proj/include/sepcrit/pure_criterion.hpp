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

#include <string>
#include <vector>

#include "sepcrit/operators.hpp"
#include "sepcrit/states.hpp"

namespace sepcrit {

inline constexpr double kDefaultPureTol = 1e-9;

struct OperatorTerm {
  std::string tag;
  double magnitude = 0.0;
};

struct PureCriterionReport {
  double total = 0.0;
  std::vector<OperatorTerm> per_operator;
  double tolerance = kDefaultPureTol;
  bool separable = true;
};

/// a^T S a, no conjugation.
Complex bilinear_value(const PureState& state, const SOperator& op);

/// |a^T S a|
double bilinear_form(const PureState& state, const SOperator& op);

/// Normalized Euclidean length of the per-operator magnitudes. Zero exactly
/// for fully separable states.
PureCriterionReport c_pure(const PureState& state, const OperatorFamily& family,
                           double tol = kDefaultPureTol);

bool verdict_pure(const PureState& state, const OperatorFamily& family,
                  double tol = kDefaultPureTol);

}  // namespace sepcrit
