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

#include "sepcrit/pure_criterion.hpp"

#include <cmath>

namespace sepcrit {

Complex bilinear_value(const PureState& state, const SOperator& op) {
  if (state.dims().total() != op.total_dim) {
    throw Error("bilinear_form: state dimension " +
                std::to_string(state.dims().total()) +
                " does not match operator dimension " + std::to_string(op.total_dim));
  }
  const CVector& a = state.amplitudes();
  Complex sum{0.0, 0.0};
  for (const auto& e : op.entries) sum += double(e.sign) * a[e.row] * a[e.col];
  return sum;
}

double bilinear_form(const PureState& state, const SOperator& op) {
  return std::abs(bilinear_value(state, op));
}

PureCriterionReport c_pure(const PureState& state, const OperatorFamily& family,
                           double tol) {
  if (!(state.dims() == family.dims)) {
    throw Error("c_pure: state dims " + state.dims().to_string() +
                " do not match family dims " + family.dims.to_string());
  }
  PureCriterionReport report;
  report.tolerance = tol;
  report.per_operator.reserve(family.size());
  // Neumaier summation keeps the result independent of operator count.
  double sum = 0.0;
  double comp = 0.0;
  for (const auto& op : family.operators) {
    const double m = bilinear_form(state, op);
    report.per_operator.push_back({op.tag(), m});
    const double x = m * m;
    const double t = sum + x;
    comp += std::abs(sum) >= x ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  report.total = family.normalization * std::sqrt(sum + comp);
  report.separable = report.total <= tol;
  return report;
}

bool verdict_pure(const PureState& state, const OperatorFamily& family, double tol) {
  return c_pure(state, family, tol).separable;
}

}  // namespace sepcrit
