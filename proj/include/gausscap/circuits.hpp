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

#include <string>
#include <variant>
#include <vector>

#include "gausscap/symplectic.hpp"

namespace gausscap {

struct PhaseRotation {
  int mode;
  double theta;
};

// Rotation-like convention: the (a,a) and (b,b) blocks are cos(theta) I, the
// (a,b) block +sin(theta) I, the (b,a) block -sin(theta) I. theta = pi/4
// mixes 50:50.
struct BeamSplitter {
  int mode_a;
  int mode_b;
  double theta;
};

// gain = cosh^2 r >= 1; tracing one arm of the squeezed vacuum leaves a
// thermal mode with gain - 1 photons.
struct TwoModeSqueeze {
  int mode_a;
  int mode_b;
  double gain;
};

struct Swap {
  int mode_a;
  int mode_b;
};

using Gate = std::variant<PhaseRotation, BeamSplitter, TwoModeSqueeze, Swap>;

// Layered gate list. Gates within a layer act on disjoint modes, so the
// depth equals the layer count.
class GaussianCircuit {
 public:
  explicit GaussianCircuit(int width);

  // Validates mode indices, squeezer gains, and in-layer disjointness.
  void add_layer(std::vector<Gate> gates);

  int width() const { return width_; }
  int depth() const { return static_cast<int>(layers_.size()); }
  int gate_count() const;
  const std::vector<std::vector<Gate>>& layers() const { return layers_; }

 private:
  int width_ = 0;
  std::vector<std::vector<Gate>> layers_;
};

// Symplectic matrix of a single gate embedded at the given width.
Matrix gate_symplectic(const Gate& gate, int width);

// Analytic n-mode Gaussian Fourier transform: 2x2 block (j, k) equals
// (1/sqrt(n)) R(2 pi j k / n). Orthogonal and symplectic.
Matrix gft_symplectic(int n_modes);

// Ordered product of the per-gate symplectic matrices, first layer applied
// first: S = S_m ... S_2 S_1.
Matrix circuit_to_symplectic(const GaussianCircuit& circuit);

// FFT-style recursive compilation of the n-mode Fourier transform for n a
// power of two: perfect-shuffle SWAP layers, two half-size transforms in
// parallel, a twiddle layer of phase rotations on the odd branch, then 50:50
// beam splitters with a trailing layer of pi rotations. Gate count stays
// within 4 n log2 n and depth within 4 (log2 n)^2.
GaussianCircuit compile_gft(int n_modes);

// SWAP network realizing the perfect shuffle 2k -> k, 2k+1 -> N + k on
// two_n = 2N modes (two_n a power of two, at least 4): log2 N layers of
// disjoint bit-transposition swaps, N/2 swaps per layer.
GaussianCircuit compile_perfect_shuffle(int two_n);

// Width-2n preparation circuit for correlated_thermal(m, n, n_bar) starting
// from vacuum: m two-mode squeezers of gain (n/m) n_bar + 1 against ancilla
// partners n..2n-1, then the compiled Fourier transform on modes 0..n-1.
// Requires n to be a power of two; other sizes are served by the direct
// covariance constructor.
GaussianCircuit prepare_correlated_circuit(int m, int n, double n_bar);

// Line-oriented export: one gate per line ("ROT m theta", "BS a b theta",
// "SQZ a b gain", "SWAP a b"), layers separated by one blank line, gates
// within a layer ordered by lowest mode, parameters printed with %.17g.
std::string circuit_to_text(const GaussianCircuit& circuit);

}  // namespace gausscap
