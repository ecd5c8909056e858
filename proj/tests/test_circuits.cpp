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

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gausscap/circuits.hpp"
#include "gausscap/states.hpp"
#include "helpers.hpp"

using namespace gausscap;
using gausscap::testing::kTestPi;
using gausscap::testing::max_abs_diff;

TEST_CASE("beam splitter symplectic matches the block formula") {
  const double theta = 0.3;
  const Matrix s = gate_symplectic(BeamSplitter{0, 1, theta}, 2);
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  Matrix expected = Matrix::Zero(4, 4);
  expected.block(0, 0, 2, 2) = c * Matrix::Identity(2, 2);
  expected.block(0, 2, 2, 2) = sn * Matrix::Identity(2, 2);
  expected.block(2, 0, 2, 2) = -sn * Matrix::Identity(2, 2);
  expected.block(2, 2, 2, 2) = c * Matrix::Identity(2, 2);
  CHECK(max_abs_diff(s, expected) <= 1e-15);
  CHECK(is_symplectic(s));
  CHECK(is_orthogonal(s));
}

TEST_CASE("two mode squeezer symplectic matches the block formula") {
  // gain = 4 gives cosh r = 2, sinh r = sqrt(3).
  const Matrix s = gate_symplectic(TwoModeSqueeze{0, 1, 4.0}, 2);
  const double ch = 2.0;
  const double sh = std::sqrt(3.0);
  Matrix z = Matrix::Identity(2, 2);
  z(1, 1) = -1.0;
  Matrix expected = Matrix::Zero(4, 4);
  expected.block(0, 0, 2, 2) = ch * Matrix::Identity(2, 2);
  expected.block(0, 2, 2, 2) = sh * z;
  expected.block(2, 0, 2, 2) = sh * z;
  expected.block(2, 2, 2, 2) = ch * Matrix::Identity(2, 2);
  CHECK(max_abs_diff(s, expected) <= 1e-15);
  CHECK(is_symplectic(s));
  CHECK_FALSE(is_orthogonal(s));
}

TEST_CASE("swap and rotation embed at the right offsets") {
  const Matrix swap = gate_symplectic(Swap{0, 1}, 3);
  Matrix expected = Matrix::Zero(6, 6);
  expected.block(0, 2, 2, 2) = Matrix::Identity(2, 2);
  expected.block(2, 0, 2, 2) = Matrix::Identity(2, 2);
  expected.block(4, 4, 2, 2) = Matrix::Identity(2, 2);
  CHECK(max_abs_diff(swap, expected) <= 1e-15);

  const Matrix rot = gate_symplectic(PhaseRotation{1, 0.4}, 2);
  Matrix rot_expected = Matrix::Identity(4, 4);
  rot_expected.block(2, 2, 2, 2) = rotation_block(0.4);
  CHECK(max_abs_diff(rot, rot_expected) <= 1e-15);
  CHECK(is_symplectic(rot));
  CHECK(is_orthogonal(rot));
}

TEST_CASE("gate symplectic validates modes") {
  CHECK_THROWS_AS(gate_symplectic(PhaseRotation{2, 0.1}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(gate_symplectic(BeamSplitter{0, 0, 0.1}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(gate_symplectic(Swap{-1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(gate_symplectic(TwoModeSqueeze{0, 1, 0.5}, 2),
                  std::invalid_argument);
}

TEST_CASE("the two mode transform factors into a balanced splitter and a pi "
          "rotation") {
  const Matrix bs = gate_symplectic(BeamSplitter{0, 1, kTestPi / 4.0}, 2);
  const Matrix rot = gate_symplectic(PhaseRotation{1, kTestPi}, 2);
  CHECK(max_abs_diff(rot * bs, gft_symplectic(2)) <= 1e-15);
}

TEST_CASE("analytic transform small cases") {
  CHECK(max_abs_diff(gft_symplectic(1), Matrix::Identity(2, 2)) <= 1e-15);
  const Matrix two = gft_symplectic(2);
  const double r = 0.7071067811865475;  // 1/sqrt(2)
  CHECK(two(0, 0) == doctest::Approx(r).epsilon(1e-15));
  CHECK(two(0, 2) == doctest::Approx(r).epsilon(1e-15));
  CHECK(two(2, 0) == doctest::Approx(r).epsilon(1e-15));
  CHECK(two(2, 2) == doctest::Approx(-r).epsilon(1e-15));
  // Off-diagonal within a block stays zero: angles are multiples of pi.
  CHECK(std::abs(two(0, 1)) <= 1e-15);
  CHECK(std::abs(two(2, 3)) <= 1e-15);
}

TEST_CASE("analytic transform is orthogonal and symplectic at odd sizes") {
  for (int n : {3, 5, 7}) {
    const Matrix s = gft_symplectic(n);
    CHECK(is_orthogonal(s, 1e-10));
    CHECK(is_symplectic(s, 1e-10));
  }
  CHECK_THROWS_AS(gft_symplectic(0), std::invalid_argument);
}

TEST_CASE("layer validation rejects malformed gates") {
  GaussianCircuit circuit(3);
  CHECK_THROWS_AS(circuit.add_layer({}), std::invalid_argument);
  CHECK_THROWS_AS(circuit.add_layer({BeamSplitter{0, 3, 0.1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(circuit.add_layer({BeamSplitter{1, 1, 0.1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      circuit.add_layer({BeamSplitter{0, 1, 0.1}, PhaseRotation{1, 0.2}}),
      std::invalid_argument);
  CHECK_THROWS_AS(circuit.add_layer({TwoModeSqueeze{0, 1, 0.99}}),
                  std::invalid_argument);
  CHECK(circuit.depth() == 0);
  CHECK(circuit.gate_count() == 0);
  CHECK_THROWS_AS(GaussianCircuit(0), std::invalid_argument);
}

TEST_CASE("layers sort gates by their lowest mode") {
  GaussianCircuit circuit(4);
  circuit.add_layer({BeamSplitter{2, 3, 0.1}, PhaseRotation{1, 0.2},
                     PhaseRotation{0, 0.3}});
  const auto& layer = circuit.layers().front();
  CHECK(std::get<PhaseRotation>(layer[0]).mode == 0);
  CHECK(std::get<PhaseRotation>(layer[1]).mode == 1);
  CHECK(std::get<BeamSplitter>(layer[2]).mode_a == 2);
  CHECK(circuit.gate_count() == 3);
  CHECK(circuit.depth() == 1);
}

TEST_CASE("circuit symplectic equals the reverse ordered gate product") {
  std::mt19937 rng(2026u);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  GaussianCircuit circuit(4);
  std::vector<Gate> flat;
  for (int layer = 0; layer < 5; ++layer) {
    std::vector<Gate> gates;
    if (layer % 2 == 0) {
      gates.push_back(BeamSplitter{0, 1, uniform(rng)});
      gates.push_back(TwoModeSqueeze{2, 3, 1.0 + uniform(rng)});
    } else {
      gates.push_back(PhaseRotation{1, uniform(rng)});
      gates.push_back(Swap{2, 0});
    }
    circuit.add_layer(gates);
    for (const Gate& g : circuit.layers().back()) {
      flat.push_back(g);
    }
  }
  Matrix product = Matrix::Identity(8, 8);
  for (const Gate& g : flat) {
    product = gate_symplectic(g, 4) * product;
  }
  CHECK(max_abs_diff(circuit_to_symplectic(circuit), product) <= 1e-13);
}

TEST_CASE("text export is layer separated and deterministic") {
  GaussianCircuit circuit(4);
  circuit.add_layer({Swap{1, 2}});
  circuit.add_layer(
      {BeamSplitter{1, 3, kTestPi / 4.0}, BeamSplitter{0, 2, kTestPi / 4.0}});
  circuit.add_layer({PhaseRotation{2, kTestPi}, PhaseRotation{3, kTestPi}});
  const std::string expected =
      "SWAP 1 2\n"
      "\n"
      "BS 0 2 0.78539816339744828\n"
      "BS 1 3 0.78539816339744828\n"
      "\n"
      "ROT 2 3.1415926535897931\n"
      "ROT 3 3.1415926535897931\n";
  CHECK(circuit_to_text(circuit) == expected);
}

TEST_CASE("text export covers squeezers") {
  GaussianCircuit circuit(2);
  circuit.add_layer({TwoModeSqueeze{0, 1, 2.5}});
  CHECK(circuit_to_text(circuit) == "SQZ 0 1 2.5\n");
}

TEST_CASE("compiled transform matches the analytic matrix") {
  for (int n : {1, 2, 4, 8, 16, 32}) {
    const GaussianCircuit circuit = compile_gft(n);
    CHECK(circuit.width() == n);
    const Matrix compiled = circuit_to_symplectic(circuit);
    CHECK(max_abs_diff(compiled, gft_symplectic(n)) <= 1e-10);
    CHECK(is_orthogonal(compiled, 1e-10));
    CHECK(is_symplectic(compiled, 1e-10));
  }
}

TEST_CASE("compiled transform gate counts follow the recursion") {
  // count(2n) = 2 count(n) + (n/2) log2 n + 3n - 1 (shuffle swaps, twiddles,
  // splitter and rotation layers); depth(2n) = depth(n) + log2(2n) + 2.
  const int expected[][3] = {
      {2, 2, 2}, {4, 10, 6}, {8, 35, 11}, {16, 105, 17}};
  for (const auto& row : expected) {
    const GaussianCircuit circuit = compile_gft(row[0]);
    CHECK(circuit.gate_count() == row[1]);
    CHECK(circuit.depth() == row[2]);
  }
  const GaussianCircuit trivial = compile_gft(1);
  CHECK(trivial.gate_count() == 0);
  CHECK(trivial.depth() == 0);
}

TEST_CASE("rotation and splitter counts satisfy the doubling bound") {
  // Swaps are routing, not computation: each doubling step adds n - 1
  // twiddle rotations, n splitters, and n sign rotations on top of two
  // half-size transforms, so work(2n) <= 2 work(n) + 4n. The swap network
  // keeps the depth recursion at depth(2n) <= depth(n) + 4 log2(n).
  const auto work_count = [](const GaussianCircuit& circuit) {
    int count = 0;
    for (const auto& layer : circuit.layers()) {
      for (const Gate& gate : layer) {
        if (!std::holds_alternative<Swap>(gate)) {
          ++count;
        }
      }
    }
    return count;
  };
  const int expected_work[][2] = {
      {2, 2}, {4, 9}, {8, 29}, {16, 81}, {32, 209}, {64, 513}};
  for (const auto& row : expected_work) {
    CHECK(work_count(compile_gft(row[0])) == row[1]);
  }
  int prev_work = work_count(compile_gft(2));
  int prev_depth = compile_gft(2).depth();
  for (int n = 2; n <= 32; n *= 2) {
    const GaussianCircuit doubled = compile_gft(2 * n);
    const int work = work_count(doubled);
    CHECK(work <= 2 * prev_work + 4 * n);
    CHECK(doubled.depth() <=
          prev_depth + 4.0 * std::log2(static_cast<double>(n)));
    prev_work = work;
    prev_depth = doubled.depth();
  }
}

TEST_CASE("compiled transform respects the stated resource bounds") {
  for (int n : {2, 4, 8, 16, 32, 64}) {
    const GaussianCircuit circuit = compile_gft(n);
    const double log_n = std::log2(static_cast<double>(n));
    CHECK(circuit.gate_count() <= 4.0 * n * log_n);
    CHECK(circuit.depth() <= 4.0 * log_n * log_n);
  }
}

TEST_CASE("compiler rejects sizes that are not powers of two") {
  for (int n : {0, 3, 6, 12, -4}) {
    CHECK_THROWS_AS(compile_gft(n), std::invalid_argument);
  }
}

TEST_CASE("perfect shuffle uses the minimal swap network") {
  const int expected[][3] = {{4, 1, 1}, {8, 4, 2}, {16, 12, 3}, {32, 32, 4}};
  for (const auto& row : expected) {
    const int two_n = row[0];
    const GaussianCircuit circuit = compile_perfect_shuffle(two_n);
    CHECK(circuit.gate_count() == row[1]);
    CHECK(circuit.depth() == row[2]);
    // Apply the SWAP layers to mode labels; slot k must end up holding old
    // label 2k (even half) or 2(k - N) + 1 (odd half).
    std::vector<int> labels(two_n);
    for (int i = 0; i < two_n; ++i) {
      labels[i] = i;
    }
    for (const auto& layer : circuit.layers()) {
      for (const Gate& gate : layer) {
        const Swap& swap = std::get<Swap>(gate);
        std::swap(labels[swap.mode_a], labels[swap.mode_b]);
      }
    }
    const int half = two_n / 2;
    for (int k = 0; k < half; ++k) {
      CHECK(labels[k] == 2 * k);
      CHECK(labels[half + k] == 2 * k + 1);
    }
    // The symplectic form of the network is the matching block permutation.
    const Matrix s = circuit_to_symplectic(circuit);
    Matrix expected_perm = Matrix::Zero(2 * two_n, 2 * two_n);
    for (int k = 0; k < half; ++k) {
      expected_perm.block(2 * k, 2 * (2 * k), 2, 2) = Matrix::Identity(2, 2);
      expected_perm.block(2 * (half + k), 2 * (2 * k + 1), 2, 2) =
          Matrix::Identity(2, 2);
    }
    CHECK(max_abs_diff(s, expected_perm) <= 1e-15);
  }
}

TEST_CASE("perfect shuffle rejects unsupported widths") {
  for (int two_n : {2, 6, 12, 0}) {
    CHECK_THROWS_AS(compile_perfect_shuffle(two_n), std::invalid_argument);
  }
}

TEST_CASE("preparation circuit reproduces the correlated state") {
  const struct {
    int m;
    int n;
    double n_bar;
  } cases[] = {{1, 2, 1.0}, {2, 4, 0.5}, {4, 4, 1.3}};
  for (const auto& c : cases) {
    const GaussianCircuit circuit =
        prepare_correlated_circuit(c.m, c.n, c.n_bar);
    CHECK(circuit.width() == 2 * c.n);
    // First layer: m squeezers with the exact pumped gain.
    const auto& first = circuit.layers().front();
    CHECK(static_cast<int>(first.size()) == c.m);
    const double gain = (static_cast<double>(c.n) / c.m) * c.n_bar + 1.0;
    for (int k = 0; k < c.m; ++k) {
      const auto& sqz = std::get<TwoModeSqueeze>(first[k]);
      CHECK(sqz.mode_a == k);
      CHECK(sqz.mode_b == c.n + k);
      CHECK(sqz.gain == gain);
    }
    CHECK(circuit.depth() == compile_gft(c.n).depth() + 1);

    CovarianceState state = vacuum_state(2 * c.n);
    state = apply_symplectic(state, circuit_to_symplectic(circuit));
    // Global state stays pure.
    for (double nu : symplectic_eigenvalues(state.cov)) {
      CHECK(std::abs(nu - 0.5) <= 1e-9);
    }
    // Reduced signal block matches the direct construction.
    std::vector<int> keep(c.n);
    for (int i = 0; i < c.n; ++i) {
      keep[i] = i;
    }
    const CovarianceState reduced = reduce_modes(state, keep);
    const CovarianceState direct = correlated_thermal(c.m, c.n, c.n_bar);
    CHECK(max_abs_diff(reduced.cov, direct.cov) <= 1e-9);
    CHECK(reduced.mean.norm() <= 1e-12);
  }
}

TEST_CASE("preparation circuit with zero photons is passive on vacuum") {
  const GaussianCircuit circuit = prepare_correlated_circuit(2, 2, 0.0);
  CovarianceState state = vacuum_state(4);
  state = apply_symplectic(state, circuit_to_symplectic(circuit));
  const CovarianceState reduced = reduce_modes(state, {0, 1});
  CHECK(max_abs_diff(reduced.cov, 0.5 * Matrix::Identity(4, 4)) <= 1e-12);
}

TEST_CASE("preparation circuit points at the covariance constructor "
          "otherwise") {
  try {
    prepare_correlated_circuit(1, 3, 1.0);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("correlated_thermal") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(prepare_correlated_circuit(0, 2, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(prepare_correlated_circuit(3, 2, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(prepare_correlated_circuit(1, 2, -0.5),
                  std::invalid_argument);
}
