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

#include "gausscap/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gausscap {

namespace {

// Round-off window below the vacuum eigenvalue 1/2 that is clamped up.
constexpr double kVacuumClamp = 1e-10;

}  // namespace

Matrix symplectic_form(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("symplectic_form: n_modes must be positive");
  }
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

Matrix rotation_block(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix r(2, 2);
  r << c, -s, s, c;
  return r;
}

Matrix phase_conjugation(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("phase_conjugation: n_modes must be positive");
  }
  Vector d(2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    d(2 * k) = 1.0;
    d(2 * k + 1) = -1.0;
  }
  return d.asDiagonal();
}

bool is_orthogonal(const Matrix& s, double tol) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    return false;
  }
  const Matrix delta =
      s * s.transpose() - Matrix::Identity(s.rows(), s.cols());
  return delta.cwiseAbs().maxCoeff() <= tol;
}

bool is_symplectic(const Matrix& s, double tol) {
  if (s.rows() != s.cols() || s.rows() == 0 || s.rows() % 2 != 0) {
    return false;
  }
  const Matrix omega = symplectic_form(static_cast<int>(s.rows()) / 2);
  const Matrix delta = s * omega * s.transpose() - omega;
  return delta.cwiseAbs().maxCoeff() <= tol;
}

std::vector<double> symplectic_eigenvalues(const Matrix& v) {
  if (v.rows() != v.cols() || v.rows() == 0 || v.rows() % 2 != 0) {
    throw std::invalid_argument(
        "symplectic_eigenvalues: matrix must be square with even dimension");
  }
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if ((v - v.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::domain_error("symplectic_eigenvalues: matrix is not symmetric");
  }
  Eigen::LLT<Matrix> llt(v);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error(
        "symplectic_eigenvalues: matrix is not positive definite");
  }
  const int n = static_cast<int>(v.rows()) / 2;
  // Omega V has purely imaginary spectrum +-i nu_k for symmetric positive
  // definite V; the magnitudes come in pairs that are averaged to damp the
  // solver's round-off split.
  Eigen::EigenSolver<Matrix> solver(symplectic_form(n) * v, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error(
        "symplectic_eigenvalues: eigenvalue iteration failed");
  }
  std::vector<double> mags(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    mags[i] = std::abs(solver.eigenvalues()(i).imag());
  }
  std::sort(mags.begin(), mags.end());
  std::vector<double> nus(n);
  for (int k = 0; k < n; ++k) {
    double nu = 0.5 * (mags[2 * k] + mags[2 * k + 1]);
    if (nu < 0.5 && nu >= 0.5 - kVacuumClamp) {
      nu = 0.5;
    }
    nus[k] = nu;
  }
  return nus;
}

double min_symplectic_eigenvalue(const Matrix& v) {
  return symplectic_eigenvalues(v).front();
}

}  // namespace gausscap
