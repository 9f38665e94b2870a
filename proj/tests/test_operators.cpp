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

#include <doctest.h>

#include <set>

#include "sepcrit/operators.hpp"
#include "test_support.hpp"

using namespace sepcrit;
using testing::eye;
using testing::iv;
using testing::kron_all;
using testing::sigma_y;

namespace {

// Brute force: every tuple where each slot is I, L(plane) or |L|(plane),
// keeping tuples with exactly two L slots.
std::size_t brute_force_count(const std::vector<int>& dims) {
  std::vector<std::size_t> choices;
  for (int n : dims) choices.push_back(1 + 2 * static_cast<std::size_t>(n * (n - 1) / 2));
  std::vector<std::size_t> idx(dims.size(), 0);
  std::size_t count = 0;
  while (true) {
    int l_slots = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) {
      const std::size_t g = static_cast<std::size_t>(dims[p] * (dims[p] - 1) / 2);
      if (idx[p] >= 1 && idx[p] <= g) ++l_slots;  // 1..g are L, g+1..2g are |L|
    }
    if (l_slots == 2) ++count;
    std::size_t p = dims.size();
    bool done = true;
    while (p-- > 0) {
      if (++idx[p] < choices[p]) {
        done = false;
        break;
      }
      idx[p] = 0;
    }
    if (done) break;
  }
  return count;
}

bool equal_up_to_sign(const CMatrix& a, const CMatrix& b) {
  return (a - b).norm() < 1e-14 || (a + b).norm() < 1e-14;
}

}  // namespace

TEST_CASE("so_generators") {
  const auto g2 = so_generators(2);
  REQUIRE(g2.size() == 1);
  RMatrix expect(2, 2);
  expect << 0, 1, -1, 0;
  CHECK(g2[0].matrix() == expect);

  const auto g3 = so_generators(3);
  REQUIRE(g3.size() == 3);
  CHECK(g3[0].plane == Plane{0, 1});
  CHECK(g3[1].plane == Plane{0, 2});
  CHECK(g3[2].plane == Plane{1, 2});

  CHECK(so_generators(4).size() == 6);
  CHECK(so_generators(7).size() == 21);
  CHECK_THROWS_AS(so_generators(1), Error);

  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : so_generators(n)) {
      const RMatrix m = g.matrix();
      CHECK(m.transpose() == -m);
      CHECK(m.cwiseAbs().sum() == 2.0);
    }
  }
}

TEST_CASE("family sizes match brute force and closed form") {
  for (const auto& dv : {std::vector<int>{2, 2}, {2, 2, 2}, {2, 3}, {3, 3, 3}, {2, 2, 2, 2},
                         {2, 3, 4}, {3, 2, 2, 2}}) {
    const SubsystemDims dims(dv);
    const auto fam = enumerate_family(dims);
    CAPTURE(dims.to_string());
    CHECK(fam.size() == brute_force_count(dv));
    CHECK(fam.size() == family_size_closed_form(dims));
  }
  CHECK(enumerate_family(SubsystemDims({2, 2, 2})).size() == 6);
  CHECK(enumerate_family(SubsystemDims({2, 2})).size() == 1);
  CHECK(enumerate_family(SubsystemDims({3, 3, 3})).size() == 108);
  CHECK(enumerate_family(SubsystemDims({2, 2, 2, 2})).size() == 24);
}

TEST_CASE("family structure invariants") {
  const SubsystemDims dims({3, 2, 3, 2});
  const auto fam = enumerate_family(dims);
  std::set<std::string> tags;
  for (const auto& op : fam.operators) {
    int l = 0;
    std::size_t a = 0;
    for (const auto& f : op.factors) {
      l += f.kind == FactorKind::AntisymGen;
      a += f.kind == FactorKind::AbsGen;
    }
    CHECK(l == 2);
    CHECK(a == op.abs_count);
    CHECK(op.abs_count <= dims.parties() - 2);
    tags.insert(op.tag());
  }
  CHECK(tags.size() == fam.size());  // deduplicated
  CHECK(fam.normalization == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-15));

  // ordering: abs_count nondecreasing
  for (std::size_t i = 1; i < fam.size(); ++i) {
    CHECK(fam.operators[i - 1].abs_count <= fam.operators[i].abs_count);
  }
}

TEST_CASE("materialized operators are exactly symmetric") {
  for (const auto& dv : {std::vector<int>{2, 2, 2}, {3, 3, 3}, {2, 3}, {2, 2, 2, 2}}) {
    const SubsystemDims dims(dv);
    for (const auto& op : enumerate_family(dims).operators) {
      const RMatrix m = materialize(op, dims);
      CHECK(m == m.transpose());
    }
  }
}

TEST_CASE("three-qubit family reproduces the sigma_y operator set in order") {
  const SubsystemDims dims({2, 2, 2});
  const auto fam = enumerate_family(dims);
  REQUIRE(fam.size() == 6);
  const CMatrix y = sigma_y();
  const CMatrix i2 = eye(2);
  const CMatrix x = iv();
  const std::vector<CMatrix> reference = {
      -kron_all({y, y, i2}), -kron_all({y, i2, y}), -kron_all({i2, y, y}),
      -kron_all({x, y, y}),  -kron_all({y, x, y}),  -kron_all({y, y, x}),
  };
  for (std::size_t k = 0; k < 6; ++k) {
    CAPTURE(k);
    CHECK(equal_up_to_sign(materialize(fam.operators[k], dims).cast<Complex>(), reference[k]));
  }
  CHECK(fam.operators[0].pattern() == "L,L,I");
  CHECK(fam.operators[3].pattern() == "|L|,L,L");
  CHECK(fam.operators[5].tag() == "L(0,1) x L(0,1) x |L|(0,1)");
}

TEST_CASE("materialize matches a direct Kronecker construction") {
  const SubsystemDims dims({3, 2, 3});
  for (const auto& op : enumerate_family(dims).operators) {
    std::vector<CMatrix> fs;
    for (std::size_t p = 0; p < 3; ++p) {
      const auto& f = op.factors[p];
      if (f.kind == FactorKind::Identity) {
        fs.push_back(eye(dims[p]));
      } else if (f.kind == FactorKind::AntisymGen) {
        fs.push_back(testing::gen(dims[p], f.plane.a, f.plane.b));
      } else {
        fs.push_back(testing::abs_gen(dims[p], f.plane.a, f.plane.b));
      }
    }
    CHECK((materialize(op, dims).cast<Complex>() - kron_all(fs)).norm() == 0.0);
  }
}

TEST_CASE("sparse apply agrees with the dense matrix") {
  auto rng = testing::rng_for(9);
  std::normal_distribution<double> normal;
  const SubsystemDims dims({2, 3, 2});
  CVector v(12);
  for (auto& x : v) x = Complex(normal(rng), normal(rng));
  CMatrix m(12, 3);
  for (Eigen::Index j = 0; j < 3; ++j) {
    for (Eigen::Index i = 0; i < 12; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  }
  for (const auto& op : enumerate_family(dims).operators) {
    const CMatrix dense = materialize(op, dims).cast<Complex>();
    CHECK((apply_operator(op, v) - dense * v).norm() < 1e-14);
    CHECK((apply_operator(op, m) - dense * m).norm() < 1e-14);
  }
  const auto& op = enumerate_family(dims).operators.front();
  CHECK_THROWS_AS(apply_operator(op, CVector(CVector::Zero(8))), Error);
}

TEST_CASE("materialize rejects inconsistent dims") {
  const auto fam = enumerate_family(SubsystemDims({3, 3}));
  CHECK_THROWS_AS(materialize(fam.operators.back(), SubsystemDims({2, 2})), Error);
  CHECK_THROWS_AS(materialize(fam.operators.back(), SubsystemDims({3, 3, 3})), Error);
}
