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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "sepcrit/states.hpp"

namespace sepcrit::zoo {

enum class Name {
  Ghz,
  W,
  Bell,
  Product,
  Werner,
  Isotropic,
  GhzNoise,
  RandomPure,
  RandomMixed,
  MixtureOfProducts,
};

/// Parses "ghz", "w", "bell", "product", "werner", "isotropic", "ghz_noise"
/// (or "ghz-noise"), "random_pure", "random_mixed", "mixture_of_products".
Name parse_name(const std::string& s);
std::string to_string(Name n);
bool is_pure(Name n);

struct StateSpec {
  Name name = Name::Ghz;
  std::vector<int> dims;  // empty: per-name default
  double p = 1.0;         // werner / isotropic: weight of the entangled projector;
                          // ghz_noise: weight of the maximally mixed part
  std::uint64_t seed = 0;
  std::size_t rank = 0;   // random_mixed; 0: full rank
  std::size_t terms = 4;  // mixture_of_products
};

using State = std::variant<PureState, DensityMatrix>;

/// Deterministic in every StateSpec field, including the seed.
State build(const StateSpec& spec);

PureState build_pure(const StateSpec& spec);

/// Mixed form of any named state; pure states come back as projectors.
DensityMatrix build_mixed(const StateSpec& spec);

// Building blocks, also used directly by tests.
PureState ghz(const SubsystemDims& dims);
PureState w_state(int qubits);
PureState bell();
DensityMatrix werner(double p);
DensityMatrix isotropic(int d, double p);
DensityMatrix ghz_noise(const SubsystemDims& dims, double q);

/// Complex Gaussian vector normalized: Haar-random pure state.
PureState haar_pure(const SubsystemDims& dims, std::mt19937_64& rng);
PureState random_product(const SubsystemDims& dims, std::mt19937_64& rng);
/// G G^dagger / tr with G of shape D x rank.
DensityMatrix ginibre_mixed(const SubsystemDims& dims, std::size_t rank,
                            std::mt19937_64& rng);
/// Dirichlet(1,...,1) weighted mixture of `terms` random product projectors.
DensityMatrix mixture_of_products(const SubsystemDims& dims, std::size_t terms,
                                  std::mt19937_64& rng);

/// Hermitize, divide by trace, validate.
DensityMatrix normalized_density(const SubsystemDims& dims, const CMatrix& m);

}  // namespace sepcrit::zoo
