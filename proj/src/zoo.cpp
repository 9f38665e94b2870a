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

#include "sepcrit/zoo.hpp"

#include <cmath>
#include <sstream>

namespace sepcrit::zoo {

namespace {

CVector gaussian_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v;
}

std::mt19937_64 seeded(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937_64(seq);
}

void require_p(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << what << ": parameter p = " << p << " must lie in [0, 1]";
    throw Error(os.str());
  }
}

SubsystemDims dims_or(const StateSpec& spec, std::vector<int> fallback) {
  return SubsystemDims(spec.dims.empty() ? std::move(fallback) : spec.dims);
}

void require_dims(const StateSpec& spec, const std::vector<int>& want) {
  if (!spec.dims.empty() && spec.dims != want) {
    throw Error(to_string(spec.name) + ": dims must be " + SubsystemDims(want).to_string());
  }
}

}  // namespace

Name parse_name(const std::string& s) {
  if (s == "ghz") return Name::Ghz;
  if (s == "w") return Name::W;
  if (s == "bell") return Name::Bell;
  if (s == "product") return Name::Product;
  if (s == "werner") return Name::Werner;
  if (s == "isotropic") return Name::Isotropic;
  if (s == "ghz_noise" || s == "ghz-noise") return Name::GhzNoise;
  if (s == "random_pure") return Name::RandomPure;
  if (s == "random_mixed") return Name::RandomMixed;
  if (s == "mixture_of_products") return Name::MixtureOfProducts;
  throw Error("unknown zoo state '" + s + "'");
}

std::string to_string(Name n) {
  switch (n) {
    case Name::Ghz: return "ghz";
    case Name::W: return "w";
    case Name::Bell: return "bell";
    case Name::Product: return "product";
    case Name::Werner: return "werner";
    case Name::Isotropic: return "isotropic";
    case Name::GhzNoise: return "ghz_noise";
    case Name::RandomPure: return "random_pure";
    case Name::RandomMixed: return "random_mixed";
    case Name::MixtureOfProducts: return "mixture_of_products";
  }
  return "?";
}

bool is_pure(Name n) {
  switch (n) {
    case Name::Ghz:
    case Name::W:
    case Name::Bell:
    case Name::Product:
    case Name::RandomPure:
      return true;
    default:
      return false;
  }
}

PureState ghz(const SubsystemDims& dims) {
  const int d = dims[0];
  for (std::size_t p = 1; p < dims.parties(); ++p) {
    if (dims[p] != d) throw Error("ghz: all local dimensions must be equal");
  }
  CVector a = CVector::Zero(static_cast<Eigen::Index>(dims.total()));
  std::vector<int> digits(dims.parties());
  for (int i = 0; i < d; ++i) {
    std::fill(digits.begin(), digits.end(), i);
    a[static_cast<Eigen::Index>(dims.flatten(digits))] = 1.0;
  }
  return make_pure(dims, a);
}

PureState w_state(int qubits) {
  SubsystemDims dims(std::vector<int>(static_cast<std::size_t>(qubits), 2));
  CVector a = CVector::Zero(static_cast<Eigen::Index>(dims.total()));
  for (int q = 0; q < qubits; ++q) a[Eigen::Index{1} << q] = 1.0;
  return make_pure(dims, a);
}

PureState bell() {
  return make_pure({2, 2}, {1.0, 0.0, 0.0, 1.0});
}

DensityMatrix normalized_density(const SubsystemDims& dims, const CMatrix& m) {
  CMatrix h = 0.5 * (m + m.adjoint());
  const double tr = h.trace().real();
  if (!(tr > 0.0)) throw Error("density: non-positive trace");
  h /= tr;
  return DensityMatrix(dims, h);
}

DensityMatrix werner(double p) {
  require_p(p, "werner");
  const SubsystemDims dims({2, 2});
  const CMatrix m = p * bell().projector() + (1.0 - p) / 4.0 * CMatrix::Identity(4, 4);
  return normalized_density(dims, m);
}

DensityMatrix isotropic(int d, double p) {
  require_p(p, "isotropic");
  const SubsystemDims dims({d, d});
  const auto phi = ghz(dims);
  const auto n = static_cast<Eigen::Index>(dims.total());
  const CMatrix m = p * phi.projector() + (1.0 - p) / double(n) * CMatrix::Identity(n, n);
  return normalized_density(dims, m);
}

DensityMatrix ghz_noise(const SubsystemDims& dims, double q) {
  require_p(q, "ghz_noise");
  const auto n = static_cast<Eigen::Index>(dims.total());
  const CMatrix m =
      (1.0 - q) * ghz(dims).projector() + q / double(n) * CMatrix::Identity(n, n);
  return normalized_density(dims, m);
}

PureState haar_pure(const SubsystemDims& dims, std::mt19937_64& rng) {
  return make_pure(dims, gaussian_vector(static_cast<Eigen::Index>(dims.total()), rng));
}

PureState random_product(const SubsystemDims& dims, std::mt19937_64& rng) {
  std::vector<CVector> factors;
  for (std::size_t p = 0; p < dims.parties(); ++p) {
    factors.push_back(gaussian_vector(dims[p], rng));
  }
  return product_state(factors);
}

DensityMatrix ginibre_mixed(const SubsystemDims& dims, std::size_t rank,
                            std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(dims.total());
  const auto r = static_cast<Eigen::Index>(rank == 0 ? dims.total() : rank);
  if (r > n) throw Error("random_mixed: rank exceeds total dimension");
  CMatrix g(n, r);
  for (Eigen::Index j = 0; j < r; ++j) g.col(j) = gaussian_vector(n, rng);
  return normalized_density(dims, g * g.adjoint());
}

DensityMatrix mixture_of_products(const SubsystemDims& dims, std::size_t terms,
                                  std::mt19937_64& rng) {
  if (terms == 0) throw Error("mixture_of_products: terms must be positive");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(terms);
  double total = 0.0;
  for (auto& x : w) total += (x = expo(rng));
  const auto n = static_cast<Eigen::Index>(dims.total());
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < terms; ++k) {
    m += (w[k] / total) * random_product(dims, rng).projector();
  }
  return normalized_density(dims, m);
}

State build(const StateSpec& spec) {
  auto rng = seeded(spec.seed);
  switch (spec.name) {
    case Name::Ghz: return ghz(dims_or(spec, {2, 2, 2}));
    case Name::W: {
      const auto dims = dims_or(spec, {2, 2, 2});
      for (std::size_t p = 0; p < dims.parties(); ++p) {
        if (dims[p] != 2) throw Error("w: requires qubit dims");
      }
      return w_state(static_cast<int>(dims.parties()));
    }
    case Name::Bell:
      require_dims(spec, {2, 2});
      return bell();
    case Name::Product: return random_product(dims_or(spec, {2, 2, 2}), rng);
    case Name::Werner:
      require_dims(spec, {2, 2});
      return werner(spec.p);
    case Name::Isotropic: {
      const auto dims = dims_or(spec, {3, 3});
      if (dims.parties() != 2 || dims[0] != dims[1]) {
        throw Error("isotropic: dims must be [d, d]");
      }
      return isotropic(dims[0], spec.p);
    }
    case Name::GhzNoise: return ghz_noise(dims_or(spec, {2, 2, 2}), spec.p);
    case Name::RandomPure: return haar_pure(dims_or(spec, {2, 2, 2}), rng);
    case Name::RandomMixed:
      return ginibre_mixed(dims_or(spec, {2, 2, 2}), spec.rank, rng);
    case Name::MixtureOfProducts:
      return mixture_of_products(dims_or(spec, {2, 2, 2}), spec.terms, rng);
  }
  throw Error("zoo: unhandled state name");
}

PureState build_pure(const StateSpec& spec) {
  auto s = build(spec);
  if (auto* p = std::get_if<PureState>(&s)) return *p;
  throw Error(to_string(spec.name) + " is a mixed state");
}

DensityMatrix build_mixed(const StateSpec& spec) {
  auto s = build(spec);
  if (auto* p = std::get_if<PureState>(&s)) return make_density(*p);
  return std::get<DensityMatrix>(s);
}

}  // namespace sepcrit::zoo
