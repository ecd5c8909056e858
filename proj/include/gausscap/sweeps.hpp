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
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gausscap/capacity.hpp"

namespace gausscap {

// Inclusive, strictly increasing linear grid with steps points.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;

  std::vector<double> points() const;
};

// Parses "start:stop:steps"; requires stop > start and steps >= 2.
Grid parse_grid(const std::string& text);

// One sweep row. f and bound carry the signed values so crossover shape is
// visible in the output; x_star is 0 when the bound vanishes.
struct SweepRow {
  double parameter = 0.0;
  double f = 0.0;
  double bound = 0.0;
  double x_star = 0.0;
  RateSource source = RateSource::single_mode;
};

// gamma grid must lie in [0, 1).
std::vector<SweepRow> sweep_gamma(const Grid& grid, double n_th, double n_bar,
                                  const OptimizerOptions& opts = {});

// n_bar grid must be positive.
std::vector<SweepRow> sweep_nbar(const Grid& grid, double eta, double n_th,
                                 const OptimizerOptions& opts = {});

// 12 significant digits, shortest form, -0 normalized to 0; the cell format
// of every CSV and regression file.
std::string format_number(double value);

// Header "<parameter_name>,f,F,x_star,source" then one line per row, LF
// endings.
std::string rows_to_csv(const std::vector<SweepRow>& rows,
                        const std::string& parameter_name);

nlohmann::json rows_to_json(const std::vector<SweepRow>& rows,
                            const std::string& parameter_name);

// Full single-point report: eta, gamma, n_th, n_bar, signed f and F, the
// clamped rate, x_star, source, and optionally the correlated-state
// cross-check block for (M, N) = check_mn.
nlohmann::json rate_report(double eta, double n_th, double n_bar,
                           const OptimizerOptions& opts,
                           const std::optional<std::pair<int, int>>& check_mn);

// gamma_star at (n_th, n_bar) always; nbar_star only when eta is given.
// Missing thresholds are emitted as nulls.
nlohmann::json thresholds_report(std::optional<double> eta, double n_th,
                                 double n_bar, const OptimizerOptions& opts);

}  // namespace gausscap
