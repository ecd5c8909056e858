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

#include <optional>
#include <utility>
#include <vector>

#include "gausscap/entropy.hpp"

namespace gausscap {

enum class RateSource { single_mode, correlated, vanishing };

const char* rate_source_name(RateSource source);

struct OptimizerOptions {
  int grid_points = 512;  // log-spaced x grid; at least 64 points
  double x_min = 1e-4;    // grid cutoff; the objective tends to 0 as x -> 0
  double x_tol = 1e-6;    // golden-section termination width
};

// Closed-form coherent information of the thermal loss channel for a
// single-mode thermal input with n_bar photons. Signed: negative once the
// channel is anti-degradable. The discriminant is evaluated through the
// covariance invariants (1-eta)n_bar + (1+eta)n_th + 1 and
// eta n_th (n_th + 1), which avoids the catastrophic cancellation the
// textbook expansion hits for eta near 1 at large n_bar.
double f_rate(double eta, double n_th, double n_bar);

// Per-use rate of the correlated input with m populated slots out of n:
// (m/n) f(eta, n_th, (n/m) n_bar), evaluated as x * f(n_bar / x) with
// x = m/n so it agrees bit-for-bit with the optimizer objective.
double rate_correlated(double eta, double n_th, int m, int n, double n_bar);

struct RateOptimum {
  double value = 0.0;   // signed max over x in (0,1] of x f(eta,n_th,n_bar/x)
  double rate = 0.0;    // max(0, value)
  double x_star = 1.0;  // argmax; exactly 1 when source == single_mode
  RateSource source = RateSource::single_mode;
};

// Maximize x f(eta, n_th, n_bar/x) over x in (0, 1]: coarse logarithmic grid
// (the last point forced to exactly 1, so value >= f_rate always), then
// golden-section refinement of the bracketing interval. Ties resolve toward
// larger x.
RateOptimum optimize_rate(double eta, double n_th, double n_bar,
                          const OptimizerOptions& opts = {});

// (average photon number, achievable rate) of a convex mixture of
// single-mode thermal rate points. Weights must be in [0, 1] and sum to 1.
std::pair<double, double> convex_hull_rate(const std::vector<double>& lambdas,
                                           const std::vector<double>& n_bars,
                                           double eta, double n_th);

// Smallest gamma in (0, 1) at which the optimized bound beats the
// single-mode rate by more than 1e-9 with x_star < 1 - 1e-6, bisected to
// 1e-4. nullopt when no crossover exists on the scan.
std::optional<double> gamma_threshold(double n_th, double n_bar,
                                      const OptimizerOptions& opts = {});

// Largest n_bar (scanned over [0.02, 50]) below which the optimized bound
// beats the single-mode rate, bisected to 1e-3. nullopt when no advantage
// exists on the scan or the advantage persists to the cap.
std::optional<double> nbar_threshold(double eta, double n_th,
                                     const OptimizerOptions& opts = {});

// Reporting-friendly summary of one parameter point. rate is clamped at 0;
// x_star is 0 when the rate vanishes and 1 for single-mode optima.
struct RatePoint {
  double n_bar = 0.0;
  double rate = 0.0;
  double x_star = 1.0;
  RateSource source = RateSource::single_mode;
};

RatePoint rate_point(double eta, double n_th, double n_bar,
                     const OptimizerOptions& opts = {});

}  // namespace gausscap
