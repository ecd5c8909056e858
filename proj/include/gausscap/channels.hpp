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

#include "gausscap/states.hpp"

namespace gausscap {

// Thermal loss channel parameters: transmissivity eta in [0, 1] and
// environment photon number n_th >= 0. gamma = 1 - eta is the loss
// probability.
struct ChannelParams {
  double eta = 1.0;
  double n_th = 0.0;

  ChannelParams(double eta_in, double n_th_in);
  double gamma() const { return 1.0 - eta; }
};

// Affine Gaussian map: mean -> T mean, cov -> T cov T^T + noise. The
// transmit block is 2*m_out x 2*m_in; noise is symmetric 2*m_out square.
struct GaussianChannel {
  Matrix transmit;
  Matrix noise;
  int m_in = 0;
  int m_out = 0;

  GaussianChannel(Matrix transmit_in, Matrix noise_in);
};

// n_modes-fold thermal loss channel: T = sqrt(eta) I, noise =
// (1 - eta)(n_th + 1/2) I. Complete positivity is asserted on construction.
GaussianChannel thermal_loss_channel(const ChannelParams& params, int n_modes);

// Channel to the environment in the standard dilation. The output carries
// two blocks of n_modes each (the environment outputs, then their purifying
// partners), so m_out = 2 * n_modes. Complete positivity is asserted on
// construction.
GaussianChannel complementary_channel(const ChannelParams& params, int n_modes);

// k-fold tensor power with outputs regrouped by block slot: all first-slot
// outputs for uses 1..k, then all second-slot outputs, and so on. A
// complementary channel therefore keeps its two-block shape under powers.
GaussianChannel tensor_pow(const GaussianChannel& channel, int k);

CovarianceState apply(const GaussianChannel& channel,
                      const CovarianceState& state);

// noise + (i/2) Omega_out - (i/2) T Omega_in T^T >= 0, decided by a
// Hermitian eigendecomposition with tolerance -tol on the smallest
// eigenvalue.
bool is_completely_positive(const GaussianChannel& channel, double tol = 1e-10);

}  // namespace gausscap
