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

#include <vector>

#include "gausscap/symplectic.hpp"

namespace gausscap {

// An n-mode Gaussian state: mean quadrature vector plus covariance matrix.
// The covariance is symmetrized on construction; gross asymmetry (beyond
// 1e-9 relative) is rejected rather than silently repaired.
struct CovarianceState {
  Vector mean;
  Matrix cov;
  int n_modes = 0;

  CovarianceState(Vector mean_in, Matrix cov_in);
};

CovarianceState vacuum_state(int n_modes);

// Product thermal state: zero mean, (n_bar + 1/2) I per mode.
CovarianceState thermal_state(double n_bar, int n_modes);

// Correlated n-mode thermal state tau_{M,N}(n_bar): the first m slots carry
// (n/m)*n_bar photons each, the rest are vacuum, and the Gaussian Fourier
// transform spreads them so every reduced single mode sits at n_bar photons.
// Any 1 <= m <= n is accepted; the power-of-two restriction belongs to the
// circuit compiler, not to the state itself.
CovarianceState correlated_thermal(int m, int n, double n_bar);

// Fourier-spread state for a convex decomposition: component i occupies the
// next lambdas[i] * n consecutive diagonal slots, in the order given, at
// n_bars[i] photons. Each lambdas[i] * n must be an integer and the weights
// must sum to 1.
CovarianceState mixed_thermal(const std::vector<double>& lambdas,
                              const std::vector<double>& n_bars, int n);

// Mean photon number of each reduced mode; includes the displacement
// contribution (|mean|^2 / 2 per mode).
std::vector<double> per_mode_photon_numbers(const CovarianceState& state);

double total_photon_number(const CovarianceState& state);

// Heisenberg check: min symplectic eigenvalue >= 1/2 - tol.
bool is_physical(const CovarianceState& state, double tol = 1e-10);

// mean -> S mean, cov -> S cov S^T. Rejects matrices that fail the
// symplectic-form identity at 1e-9, which still admits compiled circuits.
CovarianceState apply_symplectic(const CovarianceState& state, const Matrix& s);

// Partial trace at the covariance level: keep the listed modes in the order
// given.
CovarianceState reduce_modes(const CovarianceState& state,
                             const std::vector<int>& keep);

}  // namespace gausscap
