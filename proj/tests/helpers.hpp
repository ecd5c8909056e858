// Copyright 2026 The gausscap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>
#include <utility>

#include "gausscap/channels.hpp"
#include "gausscap/circuits.hpp"
#include "gausscap/states.hpp"

namespace gausscap::testing {

constexpr double kTestPi = 3.14159265358979323846;

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Random physical state: product thermal covariance pushed through a few
// random gates, plus a random displacement. Deterministic per rng stream.
inline CovarianceState random_state(std::mt19937& rng, int n_modes) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Matrix cov = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double photons = 3.0 * uniform(rng);
    cov(2 * k, 2 * k) = photons + 0.5;
    cov(2 * k + 1, 2 * k + 1) = photons + 0.5;
  }
  GaussianCircuit circuit(n_modes);
  std::uniform_int_distribution<int> mode_dist(0, n_modes - 1);
  for (int step = 0; step < 4; ++step) {
    if (n_modes == 1) {
      circuit.add_layer({PhaseRotation{0, 2.0 * kTestPi * uniform(rng)}});
      continue;
    }
    int a = mode_dist(rng);
    int b = mode_dist(rng);
    while (b == a) {
      b = mode_dist(rng);
    }
    if (a > b) {
      std::swap(a, b);
    }
    const double pick = uniform(rng);
    if (pick < 0.4) {
      circuit.add_layer({BeamSplitter{a, b, 2.0 * kTestPi * uniform(rng)}});
    } else if (pick < 0.7) {
      circuit.add_layer({TwoModeSqueeze{a, b, 1.0 + uniform(rng)}});
    } else {
      circuit.add_layer({PhaseRotation{a, 2.0 * kTestPi * uniform(rng)}});
    }
  }
  const Matrix s = circuit_to_symplectic(circuit);
  Vector mean(2 * n_modes);
  for (int i = 0; i < 2 * n_modes; ++i) {
    mean(i) = 2.0 * uniform(rng) - 1.0;
  }
  return CovarianceState(s * mean, s * cov * s.transpose());
}

inline ChannelParams random_params(std::mt19937& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  return ChannelParams(uniform(rng), 3.0 * uniform(rng));
}

}  // namespace gausscap::testing
