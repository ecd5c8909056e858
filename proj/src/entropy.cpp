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

#include "gausscap/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace gausscap {

double thermal_entropy(double x) {
  if (x < -1e-10) {
    throw std::invalid_argument(
        "thermal_entropy: photon number must be nonnegative");
  }
  // Below 1e-15 the x log2 x term is zero to double precision; this branch
  // also absorbs the permitted round-off window just below 0.
  if (x < 1e-15) {
    return 0.0;
  }
  return (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

double von_neumann_entropy(const CovarianceState& state) {
  double total = 0.0;
  for (double nu : symplectic_eigenvalues(state.cov)) {
    if (nu < 0.5 - 1e-10) {
      throw std::domain_error(
          "von_neumann_entropy: state is unphysical (nu < 1/2)");
    }
    total += thermal_entropy(nu - 0.5);
  }
  return total;
}

double coherent_information(const ChannelParams& params,
                            const CovarianceState& state) {
  const GaussianChannel direct = thermal_loss_channel(params, state.n_modes);
  const GaussianChannel comp = complementary_channel(params, state.n_modes);
  return von_neumann_entropy(apply(direct, state)) -
         von_neumann_entropy(apply(comp, state));
}

}  // namespace gausscap
