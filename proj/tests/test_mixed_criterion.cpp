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

#include "sepcrit/mixed_criterion.hpp"
#include "sepcrit/oracles.hpp"
#include "sepcrit/pure_criterion.hpp"
#include "sepcrit/zoo.hpp"
#include "test_support.hpp"

using namespace sepcrit;

namespace {

const SubsystemDims kQubits2({2, 2});
const SubsystemDims kQubits3({2, 2, 2});

double werner_closed_form(double p) { return std::max(0.0, (3.0 * p - 1.0) / 2.0); }

}  // namespace

TEST_CASE("A matrices are complex symmetric") {
  auto rng = testing::rng_for(101);
  const auto fam = enumerate_family(kQubits3);
  const auto rho = zoo::ginibre_mixed(kQubits3, 4, rng);
  const auto am = a_matrices(spectral(rho), fam);
  CHECK(am.rank == 4);
  REQUIRE(am.mats.size() == fam.size());
  for (const auto& a : am.mats) {
    CHECK(a.rows() == 4);
    CHECK((a - a.transpose()).norm() < 1e-14);
  }
}

TEST_CASE("rank one reduces to the pure form") {
  auto rng = testing::rng_for(102);
  const auto fam = enumerate_family(kQubits3);
  const auto psi = zoo::haar_pure(kQubits3, rng);
  const auto am = a_matrices(spectral(make_density(psi)), fam);
  REQUIRE(am.rank == 1);
  // A_a is 1x1 and equals psi^T S_a psi up to the eigenvector phase.
  for (std::size_t k = 0; k < fam.size(); ++k) {
    CHECK(std::abs(std::abs(am.mats[k](0, 0)) - bilinear_form(psi, fam.operators[k])) < 1e-14);
  }
  // For r = 1 the objective is |F(z)|.
  CVector z(fam.size());
  for (auto& x : z) x = Complex(std::normal_distribution<double>()(rng), 0.3);
  z.normalize();
  Complex f = 0.0;
  for (std::size_t k = 0; k < fam.size(); ++k) f += z[k] * am.mats[k](0, 0);
  CHECK(std::abs(objective(z, am, fam.normalization) - fam.normalization * std::abs(f)) < 1e-14);
}

TEST_CASE("objective of a product state is zero") {
  auto rng = testing::rng_for(103);
  const auto fam = enumerate_family(kQubits3);
  const auto am = a_matrices(spectral(make_density(zoo::random_product(kQubits3, rng))), fam);
  CVector z = CVector::Ones(6);
  CHECK(std::abs(objective(z, am, fam.normalization)) < 1e-14);
  const auto r = c_mixed(am, fam.normalization, OptimizerConfig{.restarts = 4});
  CHECK(r.value < 1e-14);
  CHECK(r.separable);
}

TEST_CASE("objective is invariant under a global phase of z") {
  auto rng = testing::rng_for(104);
  const auto fam = enumerate_family(kQubits3);
  const auto am = a_matrices(spectral(zoo::ginibre_mixed(kQubits3, 3, rng)), fam);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 20; ++t) {
    CVector z(6);
    for (auto& x : z) x = Complex(normal(rng), normal(rng));
    const double base = objective(z, am, fam.normalization);
    const Complex phase = std::polar(1.0, normal(rng));
    CHECK(std::abs(objective(CVector(z * phase), am, fam.normalization) - base) < 1e-12);
    // scaling is normalized away
    CHECK(std::abs(objective(CVector(z * 3.7), am, fam.normalization) - base) < 1e-12);
  }
}

TEST_CASE("Werner family follows the closed form") {
  const auto fam = enumerate_family(kQubits2);
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    CAPTURE(p);
    const auto r = c_mixed(zoo::werner(p), fam);
    CHECK(std::abs(r.value - werner_closed_form(p)) < 1e-6);
  }
  CHECK(verdict_mixed(zoo::werner(0.2), fam));
  CHECK_FALSE(verdict_mixed(zoo::werner(0.8), fam));
}

TEST_CASE("maximally mixed and GHZ projector") {
  const auto fam = enumerate_family(kQubits3);
  const DensityMatrix mm(kQubits3, CMatrix::Identity(8, 8) / 8.0);
  const auto r = c_mixed(mm, fam);
  CHECK(r.value == 0.0);
  CHECK(r.separable);
  CHECK(r.rank == 8);

  const auto g = c_mixed(make_density(zoo::ghz(kQubits3)), fam);
  CHECK(std::abs(g.value - 1.0) < 1e-6);
  CHECK_FALSE(g.separable);
}

TEST_CASE("separable mixtures of products") {
  auto rng = testing::rng_for(105);
  const auto fam = enumerate_family(kQubits3);
  for (int t = 0; t < 10; ++t) {
    const auto rho = zoo::mixture_of_products(kQubits3, 2 + t % 4, rng);
    CHECK(c_mixed(rho, fam).value <= 1e-5);
  }
}

TEST_CASE("restarts extend a deterministic prefix") {
  auto rng = testing::rng_for(106);
  const auto fam = enumerate_family(kQubits3);
  const auto am = a_matrices(spectral(zoo::ginibre_mixed(kQubits3, 2, rng)), fam);
  OptimizerConfig few{.restarts = 5, .seed = 9};
  OptimizerConfig many{.restarts = 20, .seed = 9};
  const auto a = c_mixed(am, fam.normalization, few);
  const auto b = c_mixed(am, fam.normalization, many);
  REQUIRE(a.restart_objectives.size() == 5);
  REQUIRE(b.restart_objectives.size() == 20);
  for (std::size_t i = 0; i < 5; ++i) CHECK(a.restart_objectives[i] == b.restart_objectives[i]);
  CHECK(b.value >= a.value);
}

TEST_CASE("result is independent of the thread count") {
  auto rng = testing::rng_for(107);
  const auto fam = enumerate_family(kQubits3);
  const auto rho = zoo::ginibre_mixed(kQubits3, 3, rng);
  OptimizerConfig one{.restarts = 12, .seed = 4, .threads = 1};
  OptimizerConfig four = one;
  four.threads = 4;
  const auto a = c_mixed(rho, fam, one);
  const auto b = c_mixed(rho, fam, four);
  CHECK(a.value == b.value);
  CHECK(a.restart_objectives == b.restart_objectives);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.best.weights == b.best.weights);
}

TEST_CASE("two qubits agree with the Wootters concurrence") {
  auto rng = testing::rng_for(108);
  const auto fam = enumerate_family(kQubits2);
  for (int t = 0; t < 20; ++t) {
    const auto rho = zoo::ginibre_mixed(kQubits2, 1 + t % 4, rng);
    CHECK(std::abs(c_mixed(rho, fam).value - wootters_mixed(rho)) < 1e-6);
  }
}

TEST_CASE("pure inputs agree with the pure criterion") {
  auto rng = testing::rng_for(109);
  for (const auto& dims : {kQubits2, kQubits3}) {
    const auto fam = enumerate_family(dims);
    for (int t = 0; t < 10; ++t) {
      const auto psi = zoo::haar_pure(dims, rng);
      const double m = c_mixed(make_density(psi), fam).value;
      CHECK(std::abs(m - c_pure(psi, fam).total) < 1e-6);
    }
  }
}

TEST_CASE("lower bound on the sampled roof") {
  auto rng = testing::rng_for(110);
  const auto fam = enumerate_family(kQubits3);
  const DecompositionSampler sampler(5, 500);
  for (int t = 0; t < 5; ++t) {
    const auto rho = zoo::ginibre_mixed(kQubits3, 2 + t % 3, rng);
    CHECK(c_mixed(rho, fam).value <= roof_upper_bound(rho, fam, sampler) + 1e-6);
  }
}

TEST_CASE("weight modes") {
  const auto fam = enumerate_family(kQubits2);
  OptimizerConfig cfg{.mode = WeightMode::NonnegativeCommonPhase};
  // One operator: both modes coincide.
  CHECK(std::abs(c_mixed(zoo::werner(0.8), fam, cfg).value - werner_closed_form(0.8)) < 1e-6);
}
