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

#include <Eigen/Dense>
#include <vector>

namespace gausscap {

// Quadrature convention used across the library: interleaved mode ordering
// (q1, p1, q2, p2, ...) with vacuum variance 1/2 per quadrature.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Block-diagonal symplectic form, n_modes blocks of [[0, 1], [-1, 0]].
Matrix symplectic_form(int n_modes);

// Planar rotation [[cos, -sin], [sin, cos]]; the 2x2 building block of every
// passive Gaussian unitary in this library.
Matrix rotation_block(double theta);

// diag(1, -1, 1, -1, ...) on 2*n_modes entries. Flips the sign of every p
// quadrature; shows up in the environment coupling of the complementary
// channel and in the two-mode squeezer.
Matrix phase_conjugation(int n_modes);

bool is_orthogonal(const Matrix& s, double tol = 1e-10);

// S Omega S^T == Omega within tol (max-norm).
bool is_symplectic(const Matrix& s, double tol = 1e-10);

// Symplectic spectrum of a symmetric positive-definite matrix: the absolute
// imaginary parts of the +-i*nu eigenvalue pairs of Omega*V, sorted
// ascending. Values within 1e-10 below 1/2 are clamped up to 1/2 so exact
// vacuum directions survive round-off. Throws std::invalid_argument on bad
// shape and std::domain_error when v is not symmetric positive-definite.
std::vector<double> symplectic_eigenvalues(const Matrix& v);

double min_symplectic_eigenvalue(const Matrix& v);

}  // namespace gausscap
