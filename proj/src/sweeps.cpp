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

#include "gausscap/sweeps.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gausscap/states.hpp"

namespace gausscap {

using nlohmann::json;

std::vector<double> Grid::points() const {
  if (steps < 2) {
    throw std::invalid_argument("Grid: need at least 2 points");
  }
  if (!(stop > start)) {
    throw std::invalid_argument("Grid: grid must be strictly increasing");
  }
  std::vector<double> pts(steps);
  for (int i = 0; i < steps; ++i) {
    pts[i] = start + (stop - start) * i / (steps - 1);
  }
  pts.front() = start;
  pts.back() = stop;
  return pts;
}

Grid parse_grid(const std::string& text) {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &start, &stop, &steps,
                  &tail) != 3) {
    throw std::invalid_argument("parse_grid: expected start:stop:steps, got '" +
                                text + "'");
  }
  Grid grid{start, stop, steps};
  grid.points();  // validates monotonicity and the point count
  return grid;
}

namespace {

SweepRow make_row(double parameter, double eta, double n_th, double n_bar,
                  const OptimizerOptions& opts) {
  SweepRow row;
  row.parameter = parameter;
  row.f = f_rate(eta, n_th, n_bar);
  const RateOptimum opt = optimize_rate(eta, n_th, n_bar, opts);
  row.bound = opt.value;
  row.x_star = opt.source == RateSource::vanishing ? 0.0 : opt.x_star;
  row.source = opt.source;
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_gamma(const Grid& grid, double n_th, double n_bar,
                                  const OptimizerOptions& opts) {
  const std::vector<double> gammas = grid.points();
  if (gammas.front() < 0.0 || gammas.back() >= 1.0) {
    throw std::invalid_argument("sweep_gamma: gamma grid must lie in [0, 1)");
  }
  std::vector<SweepRow> rows;
  rows.reserve(gammas.size());
  for (double gamma : gammas) {
    rows.push_back(make_row(gamma, 1.0 - gamma, n_th, n_bar, opts));
  }
  return rows;
}

std::vector<SweepRow> sweep_nbar(const Grid& grid, double eta, double n_th,
                                 const OptimizerOptions& opts) {
  const std::vector<double> n_bars = grid.points();
  if (!(n_bars.front() > 0.0)) {
    throw std::invalid_argument("sweep_nbar: n_bar grid must be positive");
  }
  std::vector<SweepRow> rows;
  rows.reserve(n_bars.size());
  for (double n_bar : n_bars) {
    rows.push_back(make_row(n_bar, eta, n_th, n_bar, opts));
  }
  return rows;
}

std::string format_number(double value) {
  if (value == 0.0) {
    value = 0.0;  // collapse -0 so formatting is sign-stable
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows,
                        const std::string& parameter_name) {
  std::string out = parameter_name + ",f,F,x_star,source\n";
  for (const SweepRow& row : rows) {
    out += format_number(row.parameter);
    out += ',';
    out += format_number(row.f);
    out += ',';
    out += format_number(row.bound);
    out += ',';
    out += format_number(row.x_star);
    out += ',';
    out += rate_source_name(row.source);
    out += '\n';
  }
  return out;
}

json rows_to_json(const std::vector<SweepRow>& rows,
                  const std::string& parameter_name) {
  json list = json::array();
  for (const SweepRow& row : rows) {
    list.push_back(json{{parameter_name, row.parameter},
                        {"f", row.f},
                        {"F", row.bound},
                        {"x_star", row.x_star},
                        {"source", rate_source_name(row.source)}});
  }
  return json{{"parameter", parameter_name}, {"rows", list}};
}

json rate_report(double eta, double n_th, double n_bar,
                 const OptimizerOptions& opts,
                 const std::optional<std::pair<int, int>>& check_mn) {
  const double f = f_rate(eta, n_th, n_bar);
  const RateOptimum opt = optimize_rate(eta, n_th, n_bar, opts);
  json report{
      {"eta", eta},
      {"gamma", 1.0 - eta},
      {"n_th", n_th},
      {"n_bar", n_bar},
      {"f", f},
      {"F", opt.value},
      {"rate", opt.rate},
      {"x_star", opt.source == RateSource::vanishing ? 0.0 : opt.x_star},
      {"source", rate_source_name(opt.source)}};
  if (check_mn.has_value()) {
    const auto [m, n] = *check_mn;
    const double analytic = rate_correlated(eta, n_th, m, n, n_bar);
    const double numeric =
        coherent_information(ChannelParams(eta, n_th),
                             correlated_thermal(m, n, n_bar)) /
        n;
    report["check"] = json{{"M", m},
                           {"N", n},
                           {"analytic", analytic},
                           {"numeric", numeric},
                           {"abs_diff", std::abs(analytic - numeric)}};
  }
  return report;
}

json thresholds_report(std::optional<double> eta, double n_th, double n_bar,
                       const OptimizerOptions& opts) {
  json report{{"n_th", n_th},
              {"n_bar", n_bar},
              {"gamma_tolerance", 1e-4},
              {"nbar_tolerance", 1e-3}};
  report["eta"] = eta.has_value() ? json(*eta) : json(nullptr);
  const std::optional<double> gamma_star = gamma_threshold(n_th, n_bar, opts);
  report["gamma_star"] =
      gamma_star.has_value() ? json(*gamma_star) : json(nullptr);
  std::optional<double> nbar_star;
  if (eta.has_value()) {
    nbar_star = nbar_threshold(*eta, n_th, opts);
  }
  report["nbar_star"] =
      nbar_star.has_value() ? json(*nbar_star) : json(nullptr);
  return report;
}

}  // namespace gausscap
