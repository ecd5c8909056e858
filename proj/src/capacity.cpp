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

#include "gausscap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gausscap {

const char* rate_source_name(RateSource source) {
  switch (source) {
    case RateSource::single_mode:
      return "single_mode";
    case RateSource::correlated:
      return "correlated";
    case RateSource::vanishing:
      return "vanishing";
  }
  throw std::logic_error("rate_source_name: unknown source");
}

double f_rate(double eta, double n_th, double n_bar) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("f_rate: eta must lie in [0, 1]");
  }
  if (!(n_th >= 0.0) || !(n_bar >= 0.0)) {
    throw std::invalid_argument("f_rate: photon numbers must be nonnegative");
  }
  // Environment symplectic pair nu+- = (D +- (1-eta)(n_bar - n_th)) / 2 with
  // D^2 = (nu+ + nu-)^2 - 4 nu+ nu-. Writing the sum as
  // (1-eta) n_bar + (1+eta) n_th + 1 keeps (1-eta) n_bar a single product,
  // so D stays accurate where the expanded quadratic cancels.
  const double nu_sum = (1.0 - eta) * n_bar + (1.0 + eta) * n_th + 1.0;
  const double cross = 4.0 * eta * n_th * (n_th + 1.0);
  const double disc = nu_sum * nu_sum - cross;
  if (disc < 0.0) {
    throw std::runtime_error("f_rate: discriminant lost positivity");
  }
  const double d = std::sqrt(disc);
  const double skew = (1.0 - eta) * (n_bar - n_th);
  const double out_photons = eta * n_bar + (1.0 - eta) * n_th;
  const double env_plus = 0.5 * (d + skew - 1.0);
  const double env_minus = 0.5 * (d - skew - 1.0);
  if (env_plus < -1e-9 || env_minus < -1e-9) {
    throw std::runtime_error(
        "f_rate: environment photon argument lost positivity");
  }
  return thermal_entropy(out_photons) -
         thermal_entropy(std::max(0.0, env_plus)) -
         thermal_entropy(std::max(0.0, env_minus));
}

double rate_correlated(double eta, double n_th, int m, int n, double n_bar) {
  if (n < 1 || m < 1 || m > n) {
    throw std::invalid_argument("rate_correlated: need 1 <= m <= n");
  }
  // Same expression the optimizer evaluates, so rate_correlated(m, n, .)
  // and x f(n_bar / x) at x = m/n agree bit for bit.
  const double x = static_cast<double>(m) / static_cast<double>(n);
  return x * f_rate(eta, n_th, n_bar / x);
}

namespace {

double scaled_rate(double eta, double n_th, double n_bar, double x) {
  return x * f_rate(eta, n_th, n_bar / x);
}

}  // namespace

RateOptimum optimize_rate(double eta, double n_th, double n_bar,
                          const OptimizerOptions& opts) {
  if (opts.grid_points < 64) {
    throw std::invalid_argument(
        "optimize_rate: grid must have at least 64 points");
  }
  if (!(opts.x_min > 0.0) || !(opts.x_min < 1.0)) {
    throw std::invalid_argument("optimize_rate: x_min must lie in (0, 1)");
  }
  if (!(opts.x_tol > 0.0)) {
    throw std::invalid_argument("optimize_rate: x_tol must be positive");
  }
  const int grid = opts.grid_points;
  const double log_min = std::log(opts.x_min);
  std::vector<double> xs(grid);
  for (int i = 0; i < grid; ++i) {
    xs[i] = std::exp(log_min * (1.0 - static_cast<double>(i) / (grid - 1)));
  }
  xs.back() = 1.0;  // exact endpoint, so the optimum never loses to f_rate
  int best = 0;
  double best_val = scaled_rate(eta, n_th, n_bar, xs[0]);
  double best_x = xs[0];
  for (int i = 1; i < grid; ++i) {
    const double val = scaled_rate(eta, n_th, n_bar, xs[i]);
    if (val >= best_val) {  // ties resolve toward larger x
      best_val = val;
      best_x = xs[i];
      best = i;
    }
  }
  // Golden-section refinement of the bracketing interval; every evaluation
  // competes for the global best.
  double lo = xs[std::max(0, best - 1)];
  double hi = xs[std::min(grid - 1, best + 1)];
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = scaled_rate(eta, n_th, n_bar, c);
  double fd = scaled_rate(eta, n_th, n_bar, d);
  while (hi - lo > opts.x_tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - ratio * (hi - lo);
      fc = scaled_rate(eta, n_th, n_bar, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + ratio * (hi - lo);
      fd = scaled_rate(eta, n_th, n_bar, d);
    }
    if (fc > best_val) {
      best_val = fc;
      best_x = c;
    }
    if (fd > best_val) {
      best_val = fd;
      best_x = d;
    }
  }
  RateOptimum result;
  result.value = best_val;
  result.rate = std::max(0.0, best_val);
  result.x_star = best_x;
  if (result.value <= 0.0) {
    result.source = RateSource::vanishing;
  } else if (best_x >= 1.0 - 1e-6) {
    result.source = RateSource::single_mode;
    result.x_star = 1.0;
  } else {
    result.source = RateSource::correlated;
  }
  return result;
}

std::pair<double, double> convex_hull_rate(const std::vector<double>& lambdas,
                                           const std::vector<double>& n_bars,
                                           double eta, double n_th) {
  if (lambdas.empty() || lambdas.size() != n_bars.size()) {
    throw std::invalid_argument(
        "convex_hull_rate: weight and photon lists must be nonempty and match");
  }
  double total = 0.0;
  for (double w : lambdas) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw std::invalid_argument(
          "convex_hull_rate: weights must lie in [0, 1]");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("convex_hull_rate: weights must sum to 1");
  }
  double average = 0.0;
  double rate = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    average += lambdas[i] * n_bars[i];
    rate += lambdas[i] * f_rate(eta, n_th, n_bars[i]);
  }
  return {average, rate};
}

namespace {

// Advantage indicator used by both thresholds: the optimized bound beats the
// single-mode value by a real margin at an interior optimum.
bool has_advantage(double eta, double n_th, double n_bar,
                   const OptimizerOptions& opts) {
  const RateOptimum opt = optimize_rate(eta, n_th, n_bar, opts);
  return opt.value > f_rate(eta, n_th, n_bar) + 1e-9 &&
         opt.x_star < 1.0 - 1e-6;
}

}  // namespace

std::optional<double> gamma_threshold(double n_th, double n_bar,
                                      const OptimizerOptions& opts) {
  if (!(n_th >= 0.0)) {
    throw std::invalid_argument("gamma_threshold: n_th must be nonnegative");
  }
  if (!(n_bar > 0.0)) {
    throw std::invalid_argument("gamma_threshold: n_bar must be positive");
  }
  double lo = 0.0;
  double hi = -1.0;
  for (int i = 1; i <= 199; ++i) {
    const double gamma = 0.005 * i;
    if (has_advantage(1.0 - gamma, n_th, n_bar, opts)) {
      hi = gamma;
      break;
    }
    lo = gamma;
  }
  if (hi < 0.0) {
    return std::nullopt;
  }
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (has_advantage(1.0 - mid, n_th, n_bar, opts)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> nbar_threshold(double eta, double n_th,
                                     const OptimizerOptions& opts) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("nbar_threshold: eta must lie in [0, 1]");
  }
  if (!(n_th >= 0.0)) {
    throw std::invalid_argument("nbar_threshold: n_th must be nonnegative");
  }
  // The advantage region is an interval hugging n_bar -> 0, so the scan
  // starts low (windows as narrow as (0, 0.08) occur) and bisects the right
  // edge.
  constexpr double kScanStart = 0.02;
  constexpr double kScanCap = 50.0;
  constexpr int kScanPoints = 500;
  double last_true = -1.0;
  double first_false_after = -1.0;
  for (int i = 0; i < kScanPoints; ++i) {
    const double n_bar =
        kScanStart + (kScanCap - kScanStart) * i / (kScanPoints - 1);
    if (has_advantage(eta, n_th, n_bar, opts)) {
      last_true = n_bar;
    } else if (last_true >= 0.0) {
      first_false_after = n_bar;
      break;
    }
  }
  if (last_true < 0.0 || first_false_after < 0.0) {
    return std::nullopt;
  }
  double lo = last_true;
  double hi = first_false_after;
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    if (has_advantage(eta, n_th, mid, opts)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RatePoint rate_point(double eta, double n_th, double n_bar,
                     const OptimizerOptions& opts) {
  const RateOptimum opt = optimize_rate(eta, n_th, n_bar, opts);
  RatePoint point;
  point.n_bar = n_bar;
  point.rate = opt.rate;
  point.source = opt.source;
  point.x_star = opt.source == RateSource::vanishing ? 0.0 : opt.x_star;
  return point;
}

}  // namespace gausscap
