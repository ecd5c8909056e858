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

#include "gausscap/circuits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <utility>

namespace gausscap {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(int v) { return v >= 1 && (v & (v - 1)) == 0; }

int ilog2_exact(int v) { return std::countr_zero(static_cast<unsigned>(v)); }

// (lowest mode, other mode); both entries equal for single-mode gates.
std::pair<int, int> gate_modes(const Gate& gate) {
  return std::visit(
      [](const auto& g) -> std::pair<int, int> {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PhaseRotation>) {
          return {g.mode, g.mode};
        } else {
          return {g.mode_a, g.mode_b};
        }
      },
      gate);
}

Gate offset_gate(const Gate& gate, int offset) {
  return std::visit(
      [offset](auto g) -> Gate {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PhaseRotation>) {
          g.mode += offset;
        } else {
          g.mode_a += offset;
          g.mode_b += offset;
        }
        return g;
      },
      gate);
}

// Bit-transposition SWAP layers realizing the perfect shuffle on two_n = 2N
// modes: stage s swaps bits (s, s+1) of the mode index, lowest pair first,
// which composes to the one-bit right rotation j -> (j >> 1) | (lsb << m).
std::vector<std::vector<Gate>> shuffle_layers(int two_n) {
  const int stages = ilog2_exact(two_n) - 1;
  std::vector<std::vector<Gate>> layers;
  layers.reserve(stages);
  for (int stage = 0; stage < stages; ++stage) {
    std::vector<Gate> layer;
    layer.reserve(two_n / 4);
    for (int idx = 0; idx < two_n; ++idx) {
      const int low = (idx >> stage) & 1;
      const int high = (idx >> (stage + 1)) & 1;
      if (low != high) {
        const int partner = idx ^ (1 << stage) ^ (1 << (stage + 1));
        if (idx < partner) {
          layer.push_back(Swap{idx, partner});
        }
      }
    }
    layers.push_back(std::move(layer));
  }
  return layers;
}

// Radix-2 decimation: shuffle even/odd modes apart, transform both halves,
// rotate the odd branch by the twiddle phases pi k / (n/2), then recombine
// with 50:50 splitters. The trailing pi rotations absorb the phase the
// splitter convention leaves on the difference arm; together one splitter
// plus one rotation realize the exact two-mode transform block.
std::vector<std::vector<Gate>> gft_layers(int n) {
  if (n == 1) {
    return {};
  }
  const int half = n / 2;
  std::vector<std::vector<Gate>> layers = shuffle_layers(n);
  for (auto& layer : gft_layers(half)) {
    std::vector<Gate> merged;
    merged.reserve(2 * layer.size());
    for (const Gate& gate : layer) {
      merged.push_back(gate);
    }
    for (const Gate& gate : layer) {
      merged.push_back(offset_gate(gate, half));
    }
    layers.push_back(std::move(merged));
  }
  if (half > 1) {
    std::vector<Gate> twiddles;
    twiddles.reserve(half - 1);
    for (int k = 1; k < half; ++k) {  // the identity rotation k = 0 is omitted
      twiddles.push_back(PhaseRotation{half + k, kPi * k / half});
    }
    layers.push_back(std::move(twiddles));
  }
  std::vector<Gate> splitters;
  std::vector<Gate> flips;
  splitters.reserve(half);
  flips.reserve(half);
  for (int k = 0; k < half; ++k) {
    splitters.push_back(BeamSplitter{k, half + k, kPi / 4.0});
    flips.push_back(PhaseRotation{half + k, kPi});
  }
  layers.push_back(std::move(splitters));
  layers.push_back(std::move(flips));
  return layers;
}

// Left-multiplies s by the gate's symplectic matrix in place; only the two
// affected row blocks are touched.
void left_apply(const Gate& gate, Matrix& s) {
  if (const auto* rot = std::get_if<PhaseRotation>(&gate)) {
    const Matrix rows = s.middleRows(2 * rot->mode, 2);
    s.middleRows(2 * rot->mode, 2) = rotation_block(rot->theta) * rows;
  } else if (const auto* bs = std::get_if<BeamSplitter>(&gate)) {
    const double c = std::cos(bs->theta);
    const double sn = std::sin(bs->theta);
    const Matrix rows_a = s.middleRows(2 * bs->mode_a, 2);
    const Matrix rows_b = s.middleRows(2 * bs->mode_b, 2);
    s.middleRows(2 * bs->mode_a, 2) = c * rows_a + sn * rows_b;
    s.middleRows(2 * bs->mode_b, 2) = -sn * rows_a + c * rows_b;
  } else if (const auto* sq = std::get_if<TwoModeSqueeze>(&gate)) {
    const double ch = std::sqrt(sq->gain);
    const double sh = std::sqrt(sq->gain - 1.0);
    const Matrix rows_a = s.middleRows(2 * sq->mode_a, 2);
    const Matrix rows_b = s.middleRows(2 * sq->mode_b, 2);
    Matrix conj_a = rows_a;
    conj_a.row(1) *= -1.0;
    Matrix conj_b = rows_b;
    conj_b.row(1) *= -1.0;
    s.middleRows(2 * sq->mode_a, 2) = ch * rows_a + sh * conj_b;
    s.middleRows(2 * sq->mode_b, 2) = sh * conj_a + ch * rows_b;
  } else {
    const auto& swap = std::get<Swap>(gate);
    const Matrix rows_a = s.middleRows(2 * swap.mode_a, 2);
    s.middleRows(2 * swap.mode_a, 2) = s.middleRows(2 * swap.mode_b, 2);
    s.middleRows(2 * swap.mode_b, 2) = rows_a;
  }
}

}  // namespace

GaussianCircuit::GaussianCircuit(int width) : width_(width) {
  if (width < 1) {
    throw std::invalid_argument("GaussianCircuit: width must be positive");
  }
}

void GaussianCircuit::add_layer(std::vector<Gate> gates) {
  if (gates.empty()) {
    throw std::invalid_argument(
        "GaussianCircuit: a layer must contain at least one gate");
  }
  std::set<int> used;
  for (const Gate& gate : gates) {
    const auto [a, b] = gate_modes(gate);
    if (a < 0 || a >= width_ || b < 0 || b >= width_) {
      throw std::invalid_argument("GaussianCircuit: mode index out of range");
    }
    const bool two_mode = !std::holds_alternative<PhaseRotation>(gate);
    if (two_mode && a == b) {
      throw std::invalid_argument(
          "GaussianCircuit: two-mode gate needs distinct modes");
    }
    if (!used.insert(a).second || (two_mode && !used.insert(b).second)) {
      throw std::invalid_argument(
          "GaussianCircuit: gates within a layer must act on disjoint modes");
    }
    if (const auto* sq = std::get_if<TwoModeSqueeze>(&gate);
        sq != nullptr && !(sq->gain >= 1.0)) {
      throw std::invalid_argument(
          "GaussianCircuit: squeezer gain must be at least 1");
    }
  }
  // Disjointness makes the lowest mode unique per gate, so this ordering is
  // total and the export deterministic regardless of insertion order.
  std::stable_sort(gates.begin(), gates.end(),
                   [](const Gate& x, const Gate& y) {
                     const auto [xa, xb] = gate_modes(x);
                     const auto [ya, yb] = gate_modes(y);
                     return std::min(xa, xb) < std::min(ya, yb);
                   });
  layers_.push_back(std::move(gates));
}

int GaussianCircuit::gate_count() const {
  int count = 0;
  for (const auto& layer : layers_) {
    count += static_cast<int>(layer.size());
  }
  return count;
}

Matrix gate_symplectic(const Gate& gate, int width) {
  const auto [a, b] = gate_modes(gate);
  if (width < 1 || a < 0 || a >= width || b < 0 || b >= width) {
    throw std::invalid_argument("gate_symplectic: mode index out of range");
  }
  if (!std::holds_alternative<PhaseRotation>(gate) && a == b) {
    throw std::invalid_argument(
        "gate_symplectic: two-mode gate needs distinct modes");
  }
  if (const auto* sq = std::get_if<TwoModeSqueeze>(&gate);
      sq != nullptr && !(sq->gain >= 1.0)) {
    throw std::invalid_argument(
        "gate_symplectic: squeezer gain must be at least 1");
  }
  Matrix s = Matrix::Identity(2 * width, 2 * width);
  left_apply(gate, s);
  return s;
}

Matrix gft_symplectic(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("gft_symplectic: n_modes must be positive");
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_modes));
  Matrix s(2 * n_modes, 2 * n_modes);
  for (int j = 0; j < n_modes; ++j) {
    for (int k = 0; k < n_modes; ++k) {
      s.block<2, 2>(2 * j, 2 * k) =
          norm * rotation_block(2.0 * kPi * j * k / n_modes);
    }
  }
  return s;
}

Matrix circuit_to_symplectic(const GaussianCircuit& circuit) {
  Matrix s = Matrix::Identity(2 * circuit.width(), 2 * circuit.width());
  for (const auto& layer : circuit.layers()) {
    for (const Gate& gate : layer) {
      left_apply(gate, s);
    }
  }
  return s;
}

GaussianCircuit compile_gft(int n_modes) {
  if (!is_power_of_two(n_modes)) {
    throw std::invalid_argument(
        "compile_gft: mode count must be a power of two");
  }
  GaussianCircuit circuit(n_modes);
  for (auto& layer : gft_layers(n_modes)) {
    circuit.add_layer(std::move(layer));
  }
  return circuit;
}

GaussianCircuit compile_perfect_shuffle(int two_n) {
  if (!is_power_of_two(two_n) || two_n < 4) {
    throw std::invalid_argument(
        "compile_perfect_shuffle: width must be a power of two, at least 4");
  }
  GaussianCircuit circuit(two_n);
  for (auto& layer : shuffle_layers(two_n)) {
    circuit.add_layer(std::move(layer));
  }
  return circuit;
}

GaussianCircuit prepare_correlated_circuit(int m, int n, double n_bar) {
  if (n < 1 || m < 1 || m > n) {
    throw std::invalid_argument("prepare_correlated_circuit: need 1 <= m <= n");
  }
  if (!is_power_of_two(n)) {
    throw std::invalid_argument(
        "prepare_correlated_circuit: n must be a power of two; other sizes "
        "are served by the direct covariance constructor correlated_thermal");
  }
  if (!(n_bar >= 0.0)) {
    throw std::invalid_argument(
        "prepare_correlated_circuit: n_bar must be nonnegative");
  }
  GaussianCircuit circuit(2 * n);
  std::vector<Gate> squeezers;
  squeezers.reserve(m);
  const double gain = (static_cast<double>(n) / m) * n_bar + 1.0;
  for (int k = 0; k < m; ++k) {
    squeezers.push_back(TwoModeSqueeze{k, n + k, gain});
  }
  circuit.add_layer(std::move(squeezers));
  for (auto& layer : gft_layers(n)) {
    circuit.add_layer(std::move(layer));
  }
  return circuit;
}

std::string circuit_to_text(const GaussianCircuit& circuit) {
  std::string out;
  char buf[80];
  bool first_layer = true;
  for (const auto& layer : circuit.layers()) {
    if (!first_layer) {
      out += '\n';
    }
    first_layer = false;
    for (const Gate& gate : layer) {
      if (const auto* rot = std::get_if<PhaseRotation>(&gate)) {
        std::snprintf(buf, sizeof buf, "ROT %d %.17g", rot->mode, rot->theta);
      } else if (const auto* bs = std::get_if<BeamSplitter>(&gate)) {
        std::snprintf(buf, sizeof buf, "BS %d %d %.17g", bs->mode_a,
                      bs->mode_b, bs->theta);
      } else if (const auto* sq = std::get_if<TwoModeSqueeze>(&gate)) {
        std::snprintf(buf, sizeof buf, "SQZ %d %d %.17g", sq->mode_a,
                      sq->mode_b, sq->gain);
      } else {
        const auto& swap = std::get<Swap>(gate);
        std::snprintf(buf, sizeof buf, "SWAP %d %d", swap.mode_a, swap.mode_b);
      }
      out += buf;
      out += '\n';
    }
  }
  return out;
}

}  // namespace gausscap
