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

#include "gausscap/channels.hpp"

namespace gausscap {

// Entropy of a thermal state with x mean photons, base 2:
// (x+1)log2(x+1) - x log2 x, continuously extended by 0 at x = 0. Arguments
// in [-1e-10, 0) are treated as round-off and clamped to 0; anything lower
// throws std::invalid_argument.
double thermal_entropy(double x);

// Sum of thermal_entropy(nu_k - 1/2) over the symplectic spectrum, in bits.
// Throws std::domain_error for unphysical covariances (nu_min < 1/2 - 1e-10).
double von_neumann_entropy(const CovarianceState& state);

// S(loss(rho)) - S(complementary(rho)) for the n-mode thermal loss channel
// matching the state's mode count, in bits for the whole input block; divide
// by n_modes for a per-use rate. May be negative.
double coherent_information(const ChannelParams& params,
                            const CovarianceState& state);

}  // namespace gausscap
