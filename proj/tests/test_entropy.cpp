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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gausscap/capacity.hpp"
#include "gausscap/circuits.hpp"
#include "gausscap/entropy.hpp"
#include "helpers.hpp"

using namespace gausscap;
using gausscap::testing::max_abs_diff;

namespace {

// Independent oracle: entropy of the geometric photon-number distribution,
// -sum p_n log2 p_n with p_n = n_bar^n / (n_bar + 1)^(n + 1), truncated at
// 200 terms (geometric tails are negligible for n_bar <= 2).
double fock_series_entropy(double n_bar) {
  double total = 0.0;
  for (int n = 0; n <= 200; ++n) {
    const double p =
        std::pow(n_bar, n) / std::pow(n_bar + 1.0, n + 1);
    if (p > 0.0) {
      total -= p * std::log2(p);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("thermal entropy hits the reference values") {
  CHECK(thermal_entropy(0.0) == 0.0);
  CHECK(std::abs(thermal_entropy(1.0) - 2.0) <= 1e-12);
  CHECK(std::abs(thermal_entropy(0.5) - 1.3774437510817343) <= 1e-12);
  CHECK(std::abs(thermal_entropy(4.0) - 3.60964047443681) <= 1e-10);
}

TEST_CASE("thermal entropy matches the photon-number series") {
  for (double n_bar : {0.5, 1.7}) {
    CHECK(std::abs(thermal_entropy(n_bar) - fock_series_entropy(n_bar)) <=
          1e-12);
  }
}

TEST_CASE("thermal entropy clamps round-off and rejects real negatives") {
  CHECK(thermal_entropy(-1e-11) == 0.0);
  CHECK(thermal_entropy(1e-16) == 0.0);
  CHECK_THROWS_AS(thermal_entropy(-1e-9), std::invalid_argument);
}

TEST_CASE("thermal entropy is increasing and concave") {
  double previous = thermal_entropy(0.05);
  double previous_step = 0.0;
  bool first = true;
  for (double x = 0.1; x <= 10.0; x += 0.05) {
    const double current = thermal_entropy(x);
    const double step = current - previous;
    CHECK(step > 0.0);
    if (!first) {
      CHECK(step < previous_step + 1e-12);
    }
    first = false;
    previous = current;
    previous_step = step;
  }
}

TEST_CASE("entropy of product states adds up") {
  CHECK(von_neumann_entropy(vacuum_state(3)) == 0.0);
  CHECK(std::abs(von_neumann_entropy(thermal_state(1.0, 1)) - 2.0) <= 1e-12);

  Matrix combined = Matrix::Zero(4, 4);
  combined.topLeftCorner(2, 2) = thermal_state(0.3, 1).cov;
  combined.bottomRightCorner(2, 2) = thermal_state(2.1, 1).cov;
  const CovarianceState product(Vector::Zero(4), combined);
  CHECK(std::abs(von_neumann_entropy(product) - thermal_entropy(0.3) -
                 thermal_entropy(2.1)) <= 1e-10);
}

TEST_CASE("correlated state entropy equals one hot mode") {
  const double entropy = von_neumann_entropy(correlated_thermal(1, 4, 1.0));
  CHECK(std::abs(entropy - thermal_entropy(4.0)) <= 1e-10);
  CHECK(std::abs(entropy - 3.60964047443681) <= 1e-9);
}

TEST_CASE("entropy is invariant under passive interferometers") {
  const CovarianceState state = correlated_thermal(2, 4, 0.8);
  const CovarianceState rotated = apply_symplectic(state, gft_symplectic(4));
  CHECK(std::abs(von_neumann_entropy(state) - von_neumann_entropy(rotated)) <=
        1e-10);
}

TEST_CASE("entropy rejects unphysical states") {
  const CovarianceState sub_vacuum(Vector::Zero(2),
                                   0.4 * Matrix::Identity(2, 2));
  CHECK_THROWS_AS(von_neumann_entropy(sub_vacuum), std::domain_error);
}

TEST_CASE("coherent information of the identity channel is the entropy") {
  for (double n_bar : {0.5, 1.0, 3.0}) {
    const double info = coherent_information(ChannelParams(1.0, 1.0),
                                             thermal_state(n_bar, 1));
    CHECK(std::abs(info - thermal_entropy(n_bar)) <= 1e-12);
  }
}

TEST_CASE("balanced pure loss has zero coherent information") {
  for (double n_bar : {0.3, 1.0, 4.2}) {
    const double info = coherent_information(ChannelParams(0.5, 0.0),
                                             thermal_state(n_bar, 1));
    CHECK(std::abs(info) <= 1e-9);
  }
}

TEST_CASE("coherent information agrees with the closed form") {
  const double info =
      coherent_information(ChannelParams(0.6, 1.0), thermal_state(1.0, 1));
  CHECK(std::abs(info - f_rate(0.6, 1.0, 1.0)) <= 1e-9);
}

TEST_CASE("coherent information goes negative deep in the loss region") {
  const double info =
      coherent_information(ChannelParams(0.3, 1.0), thermal_state(1.0, 1));
  CHECK(info < -0.1);
}
