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

#include "gausscap/channels.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace gausscap {

ChannelParams::ChannelParams(double eta_in, double n_th_in)
    : eta(eta_in), n_th(n_th_in) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("ChannelParams: eta must lie in [0, 1]");
  }
  if (!(n_th >= 0.0)) {
    throw std::invalid_argument("ChannelParams: n_th must be nonnegative");
  }
}

GaussianChannel::GaussianChannel(Matrix transmit_in, Matrix noise_in)
    : transmit(std::move(transmit_in)), noise(std::move(noise_in)) {
  if (transmit.rows() == 0 || transmit.cols() == 0 || transmit.rows() % 2 != 0 ||
      transmit.cols() % 2 != 0) {
    throw std::invalid_argument(
        "GaussianChannel: transmit block must pair quadratures");
  }
  if (noise.rows() != transmit.rows() || noise.cols() != transmit.rows()) {
    throw std::invalid_argument(
        "GaussianChannel: noise must be square and match the output dimension");
  }
  const double scale = std::max(1.0, noise.cwiseAbs().maxCoeff());
  if ((noise - noise.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw std::invalid_argument("GaussianChannel: noise is not symmetric");
  }
  Matrix symmetrized = 0.5 * (noise + noise.transpose());
  noise = std::move(symmetrized);
  m_in = static_cast<int>(transmit.cols()) / 2;
  m_out = static_cast<int>(transmit.rows()) / 2;
}

GaussianChannel thermal_loss_channel(const ChannelParams& params, int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument(
        "thermal_loss_channel: n_modes must be positive");
  }
  const int dim = 2 * n_modes;
  GaussianChannel channel(std::sqrt(params.eta) * Matrix::Identity(dim, dim),
                          (1.0 - params.eta) * (params.n_th + 0.5) *
                              Matrix::Identity(dim, dim));
  if (!is_completely_positive(channel)) {
    throw std::runtime_error(
        "thermal_loss_channel: complete positivity check failed");
  }
  return channel;
}

GaussianChannel complementary_channel(const ChannelParams& params,
                                      int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument(
        "complementary_channel: n_modes must be positive");
  }
  const int dim = 2 * n_modes;
  // Environment output plus its purifying partner: the partner block keeps
  // the output pure when the input is, which is what the coherent
  // information subtracts.
  Matrix transmit = Matrix::Zero(2 * dim, dim);
  transmit.topRows(dim) = -std::sqrt(1.0 - params.eta) *
                          Matrix::Identity(dim, dim);
  const double env = params.n_th + 0.5;
  const double cross =
      std::sqrt(params.eta * params.n_th * (params.n_th + 1.0));
  const Matrix z = phase_conjugation(n_modes);
  Matrix noise = Matrix::Zero(2 * dim, 2 * dim);
  noise.topLeftCorner(dim, dim) = params.eta * env * Matrix::Identity(dim, dim);
  noise.topRightCorner(dim, dim) = cross * z;
  noise.bottomLeftCorner(dim, dim) = cross * z;
  noise.bottomRightCorner(dim, dim) = env * Matrix::Identity(dim, dim);
  GaussianChannel channel(std::move(transmit), std::move(noise));
  if (!is_completely_positive(channel)) {
    throw std::runtime_error(
        "complementary_channel: complete positivity check failed");
  }
  return channel;
}

GaussianChannel tensor_pow(const GaussianChannel& channel, int k) {
  if (k < 1) {
    throw std::invalid_argument("tensor_pow: k must be positive");
  }
  if (k == 1) {
    return channel;
  }
  // Modes are regrouped by block slot: use u of input slot s lands at index
  // s * k + u, and likewise for outputs. Per-use blocks stay use-diagonal.
  const int si = channel.m_in;
  const int so = channel.m_out;
  Matrix transmit = Matrix::Zero(2 * so * k, 2 * si * k);
  Matrix noise = Matrix::Zero(2 * so * k, 2 * so * k);
  for (int u = 0; u < k; ++u) {
    for (int a = 0; a < so; ++a) {
      for (int b = 0; b < si; ++b) {
        transmit.block<2, 2>(2 * (a * k + u), 2 * (b * k + u)) =
            channel.transmit.block<2, 2>(2 * a, 2 * b);
      }
      for (int b = 0; b < so; ++b) {
        noise.block<2, 2>(2 * (a * k + u), 2 * (b * k + u)) =
            channel.noise.block<2, 2>(2 * a, 2 * b);
      }
    }
  }
  return GaussianChannel(std::move(transmit), std::move(noise));
}

CovarianceState apply(const GaussianChannel& channel,
                      const CovarianceState& state) {
  if (channel.m_in != state.n_modes) {
    throw std::invalid_argument(
        "apply: channel input modes must match the state");
  }
  return CovarianceState(
      channel.transmit * state.mean,
      channel.transmit * state.cov * channel.transmit.transpose() +
          channel.noise);
}

bool is_completely_positive(const GaussianChannel& channel, double tol) {
  using CMatrix = Eigen::MatrixXcd;
  const std::complex<double> half_i(0.0, 0.5);
  const Matrix omega_out = symplectic_form(channel.m_out);
  const Matrix pushed = channel.transmit * symplectic_form(channel.m_in) *
                        channel.transmit.transpose();
  const CMatrix hermitian =
      channel.noise.cast<std::complex<double>>() +
      half_i * (omega_out - pushed).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error(
        "is_completely_positive: eigenvalue iteration failed");
  }
  return solver.eigenvalues().minCoeff() >= -tol;
}

}  // namespace gausscap
