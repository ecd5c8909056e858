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

#include "gausscap/states.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "gausscap/circuits.hpp"

namespace gausscap {

CovarianceState::CovarianceState(Vector mean_in, Matrix cov_in)
    : mean(std::move(mean_in)), cov(std::move(cov_in)) {
  if (cov.rows() != cov.cols() || cov.rows() == 0 || cov.rows() % 2 != 0) {
    throw std::invalid_argument(
        "CovarianceState: covariance must be square with even dimension");
  }
  if (mean.size() != cov.rows()) {
    throw std::invalid_argument(
        "CovarianceState: mean length must match the covariance dimension");
  }
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw std::invalid_argument("CovarianceState: covariance is not symmetric");
  }
  Matrix symmetrized = 0.5 * (cov + cov.transpose());
  cov = std::move(symmetrized);
  n_modes = static_cast<int>(cov.rows()) / 2;
}

CovarianceState vacuum_state(int n_modes) {
  return thermal_state(0.0, n_modes);
}

CovarianceState thermal_state(double n_bar, int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("thermal_state: n_modes must be positive");
  }
  if (!(n_bar >= 0.0)) {
    throw std::invalid_argument("thermal_state: n_bar must be nonnegative");
  }
  return CovarianceState(
      Vector::Zero(2 * n_modes),
      (n_bar + 0.5) * Matrix::Identity(2 * n_modes, 2 * n_modes));
}

namespace {

// Fourier-spread covariance for per-slot photon numbers d: S diag S^T with
// diag entries d[k] + 1/2 duplicated per quadrature.
CovarianceState fourier_spread(const std::vector<double>& slot_photons) {
  const int n = static_cast<int>(slot_photons.size());
  Matrix diag = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    diag(2 * k, 2 * k) = slot_photons[k] + 0.5;
    diag(2 * k + 1, 2 * k + 1) = slot_photons[k] + 0.5;
  }
  const Matrix s = gft_symplectic(n);
  return CovarianceState(Vector::Zero(2 * n), s * diag * s.transpose());
}

}  // namespace

CovarianceState correlated_thermal(int m, int n, double n_bar) {
  if (n < 1 || m < 1 || m > n) {
    throw std::invalid_argument("correlated_thermal: need 1 <= m <= n");
  }
  if (!(n_bar >= 0.0)) {
    throw std::invalid_argument("correlated_thermal: n_bar must be nonnegative");
  }
  std::vector<double> slots(n, 0.0);
  const double hot = (static_cast<double>(n) / m) * n_bar;
  for (int k = 0; k < m; ++k) {
    slots[k] = hot;
  }
  return fourier_spread(slots);
}

CovarianceState mixed_thermal(const std::vector<double>& lambdas,
                              const std::vector<double>& n_bars, int n) {
  if (lambdas.empty() || lambdas.size() != n_bars.size()) {
    throw std::invalid_argument(
        "mixed_thermal: weight and photon lists must be nonempty and match");
  }
  if (n < 1) {
    throw std::invalid_argument("mixed_thermal: n must be positive");
  }
  double total = 0.0;
  for (double w : lambdas) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw std::invalid_argument("mixed_thermal: weights must lie in [0, 1]");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("mixed_thermal: weights must sum to 1");
  }
  std::vector<double> slots(n, 0.0);
  int next = 0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(n_bars[i] >= 0.0)) {
      throw std::invalid_argument(
          "mixed_thermal: photon numbers must be nonnegative");
    }
    const double exact = lambdas[i] * n;
    const int count = static_cast<int>(std::lround(exact));
    if (std::abs(exact - count) > 1e-9) {
      throw std::invalid_argument(
          "mixed_thermal: weight times n must be an integer slot count, got " +
          std::to_string(exact));
    }
    if (next + count > n) {
      throw std::invalid_argument("mixed_thermal: slot counts exceed n");
    }
    for (int k = 0; k < count; ++k) {
      slots[next + k] = n_bars[i];
    }
    next += count;
  }
  if (next != n) {
    throw std::invalid_argument("mixed_thermal: slot counts must fill all n");
  }
  return fourier_spread(slots);
}

std::vector<double> per_mode_photon_numbers(const CovarianceState& state) {
  std::vector<double> photons(state.n_modes);
  for (int k = 0; k < state.n_modes; ++k) {
    const double second_moment =
        0.5 * (state.cov(2 * k, 2 * k) + state.cov(2 * k + 1, 2 * k + 1)) +
        0.5 * (state.mean(2 * k) * state.mean(2 * k) +
               state.mean(2 * k + 1) * state.mean(2 * k + 1));
    photons[k] = second_moment - 0.5;
  }
  return photons;
}

double total_photon_number(const CovarianceState& state) {
  double total = 0.0;
  for (double p : per_mode_photon_numbers(state)) {
    total += p;
  }
  return total;
}

bool is_physical(const CovarianceState& state, double tol) {
  Eigen::LLT<Matrix> llt(state.cov);
  if (llt.info() != Eigen::Success) {
    return false;
  }
  return min_symplectic_eigenvalue(state.cov) >= 0.5 - tol;
}

CovarianceState apply_symplectic(const CovarianceState& state,
                                 const Matrix& s) {
  if (s.rows() != 2 * state.n_modes || s.cols() != 2 * state.n_modes) {
    throw std::invalid_argument(
        "apply_symplectic: matrix dimension must match the state");
  }
  if (!is_symplectic(s, 1e-9)) {
    throw std::invalid_argument("apply_symplectic: matrix is not symplectic");
  }
  return CovarianceState(s * state.mean, s * state.cov * s.transpose());
}

CovarianceState reduce_modes(const CovarianceState& state,
                             const std::vector<int>& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("reduce_modes: keep list must be nonempty");
  }
  std::set<int> seen;
  for (int mode : keep) {
    if (mode < 0 || mode >= state.n_modes) {
      throw std::invalid_argument("reduce_modes: mode index out of range");
    }
    if (!seen.insert(mode).second) {
      throw std::invalid_argument("reduce_modes: duplicate mode index");
    }
  }
  const int n = static_cast<int>(keep.size());
  Vector mean(2 * n);
  Matrix cov(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    mean.segment<2>(2 * i) = state.mean.segment<2>(2 * keep[i]);
    for (int j = 0; j < n; ++j) {
      cov.block<2, 2>(2 * i, 2 * j) =
          state.cov.block<2, 2>(2 * keep[i], 2 * keep[j]);
    }
  }
  return CovarianceState(std::move(mean), std::move(cov));
}

}  // namespace gausscap
