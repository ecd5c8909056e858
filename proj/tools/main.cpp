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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gausscap/capacity.hpp"
#include "gausscap/circuits.hpp"
#include "gausscap/entropy.hpp"
#include "gausscap/states.hpp"
#include "gausscap/sweeps.hpp"

namespace {

using nlohmann::json;

constexpr const char* kOutDirEnvVar = "GAUSSCAP_OUT_DIR";

// Output routing precedence: --out flag, then $GAUSSCAP_OUT_DIR with the
// subcommand's default file name, then stdout (nullopt).
std::optional<std::string> resolve_output(const std::string& out_flag,
                                          const std::string& default_name) {
  if (!out_flag.empty()) {
    return out_flag;
  }
  if (const char* dir = std::getenv(kOutDirEnvVar);
      dir != nullptr && *dir != '\0') {
    return (std::filesystem::path(dir) / default_name).string();
  }
  return std::nullopt;
}

int emit(const std::string& payload, const std::optional<std::string>& path) {
  if (!path.has_value()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return 0;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n",
                 path->c_str());
    return 1;
  }
  file.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  file.flush();
  if (!file.good()) {
    std::fprintf(stderr, "error: failed while writing '%s'\n", path->c_str());
    return 1;
  }
  return 0;
}

// Exit-code policy: bad values are usage errors (2), runtime and I/O
// failures are 1.
int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::invalid_argument& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return 2;
  } catch (const std::exception& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return 1;
  }
}

std::pair<int, int> parse_check_mn(const std::string& text) {
  int m = 0;
  int n = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d,%d%c", &m, &n, &tail) != 2 || m < 1 ||
      n < m) {
    throw std::invalid_argument("--check-mn expects M,N with 1 <= M <= N");
  }
  return {m, n};
}

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& detail) {
  if (!ok) {
    throw CheckFailure(detail);
  }
}

int run_selfcheck() {
  using namespace gausscap;
  struct Check {
    const char* name;
    std::function<void()> body;
  };
  const std::vector<Check> checks = {
      {"symplectic form squares to minus identity",
       [] {
         const Matrix omega = symplectic_form(3);
         require((omega * omega + Matrix::Identity(6, 6))
                     .cwiseAbs()
                     .maxCoeff() <= 1e-14,
                 "omega^2 deviates from -I");
       }},
      {"fourier transforms are orthogonal symplectics",
       [] {
         for (int n : {1, 2, 3, 4, 5, 8, 16}) {
           const Matrix s = gft_symplectic(n);
           require(is_orthogonal(s, 1e-10) && is_symplectic(s, 1e-10),
                   "n = " + std::to_string(n));
         }
       }},
      {"closed form matches the entropy difference",
       [] {
         const double cases[][3] = {
             {0.6, 1.0, 1.0}, {0.35, 2.0, 1.3}, {0.95, 0.2, 5.0}};
         for (const auto& c : cases) {
           const double direct = f_rate(c[0], c[1], c[2]);
           const double via_entropy = coherent_information(
               ChannelParams(c[0], c[1]), thermal_state(c[2], 1));
           require(std::abs(direct - via_entropy) <= 1e-9,
                   "mismatch at eta = " + std::to_string(c[0]));
         }
       }},
      {"correlated state reproduces the scaled rate",
       [] {
         const int mn[][2] = {{1, 2}, {2, 3}, {3, 5}};
         for (const auto& p : mn) {
           const double analytic =
               rate_correlated(0.7, 1.0, p[0], p[1], 1.0);
           const double numeric =
               coherent_information(ChannelParams(0.7, 1.0),
                                    correlated_thermal(p[0], p[1], 1.0)) /
               p[1];
           require(std::abs(analytic - numeric) <= 1e-9,
                   "M = " + std::to_string(p[0]) +
                       ", N = " + std::to_string(p[1]));
         }
       }},
      {"channels pass the complete positivity test",
       [] {
         for (double eta : {0.0, 0.3, 0.7, 1.0}) {
           for (double nth : {0.0, 1.0, 3.0}) {
             const ChannelParams params(eta, nth);
             require(is_completely_positive(thermal_loss_channel(params, 2)),
                     "loss channel");
             require(
                 is_completely_positive(complementary_channel(params, 2)),
                 "complementary channel");
           }
         }
       }},
      {"compiled fourier transform matches the analytic matrix",
       [] {
         const GaussianCircuit circuit = compile_gft(8);
         require((circuit_to_symplectic(circuit) - gft_symplectic(8))
                     .cwiseAbs()
                     .maxCoeff() <= 1e-9,
                 "n = 8 deviation");
         const GaussianCircuit two = compile_gft(2);
         require(two.gate_count() == 2 && two.depth() == 2,
                 "n = 2 gate count or depth");
       }},
      {"perfect shuffle network is exact",
       [] {
         const GaussianCircuit circuit = compile_perfect_shuffle(8);
         require(circuit.gate_count() == 4 && circuit.depth() == 2, "counts");
         std::vector<int> labels(8);
         std::iota(labels.begin(), labels.end(), 0);
         for (const auto& layer : circuit.layers()) {
           for (const Gate& gate : layer) {
             const auto& swap = std::get<Swap>(gate);
             std::swap(labels[swap.mode_a], labels[swap.mode_b]);
           }
         }
         for (int k = 0; k < 4; ++k) {
           require(labels[k] == 2 * k && labels[4 + k] == 2 * k + 1,
                   "permutation");
         }
       }},
      {"state preparation circuit reaches the target covariance",
       [] {
         const GaussianCircuit circuit = prepare_correlated_circuit(2, 4, 0.5);
         const CovarianceState prepared = apply_symplectic(
             vacuum_state(8), circuit_to_symplectic(circuit));
         const CovarianceState reduced = reduce_modes(prepared, {0, 1, 2, 3});
         require((reduced.cov - correlated_thermal(2, 4, 0.5).cov)
                     .cwiseAbs()
                     .maxCoeff() <= 1e-9,
                 "covariance deviation");
       }},
      {"optimized bound dominates the single-mode rate",
       [] {
         std::mt19937 rng(20260814u);
         std::uniform_real_distribution<double> uniform(0.0, 1.0);
         for (int i = 0; i < 200; ++i) {
           const double eta = 0.5 + 0.5 * uniform(rng);
           const double nth = 3.0 * uniform(rng);
           const double n_bar = 0.05 + 5.0 * uniform(rng);
           require(optimize_rate(eta, nth, n_bar).rate >=
                       std::max(0.0, f_rate(eta, nth, n_bar)) - 1e-12,
                   "sample " + std::to_string(i));
         }
       }},
      {"thermal entropy reference values",
       [] {
         require(std::abs(thermal_entropy(1.0) - 2.0) <= 1e-12, "g(1)");
         require(std::abs(thermal_entropy(0.5) - 1.3774437510817343) <= 1e-12,
                 "g(1/2)");
       }},
  };
  int failures = 0;
  for (const Check& check : checks) {
    try {
      check.body();
      std::printf("ok   %s\n", check.name);
    } catch (const std::exception& error) {
      ++failures;
      std::printf("FAIL %s: %s\n", check.name, error.what());
    }
  }
  if (failures > 0) {
    std::printf("%d check(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu checks passed\n", checks.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Coherent-information rates of the Gaussian thermal loss channel and "
      "an FFT-style Gaussian Fourier transform compiler"};
  app.require_subcommand(1);

  gausscap::OptimizerOptions default_opts;

  // rate
  double rate_eta = 0.0;
  double rate_gamma = 0.0;
  double rate_nth = 1.0;
  double rate_nbar = 1.0;
  int rate_grid_size = default_opts.grid_points;
  std::string rate_check;
  std::string rate_out;
  auto* rate_cmd =
      app.add_subcommand("rate", "Single-point rate report (JSON)");
  auto* rate_eta_opt =
      rate_cmd->add_option("--eta", rate_eta, "transmissivity in [0, 1]");
  auto* rate_gamma_opt =
      rate_cmd->add_option("--gamma", rate_gamma, "loss probability 1 - eta");
  rate_eta_opt->excludes(rate_gamma_opt);
  rate_gamma_opt->excludes(rate_eta_opt);
  rate_cmd->add_option("--nth", rate_nth, "environment photon number");
  rate_cmd->add_option("--nbar", rate_nbar, "input photon number");
  rate_cmd->add_option("--x-grid", rate_grid_size, "optimizer grid size");
  rate_cmd->add_option("--check-mn", rate_check,
                       "cross-check against the correlated M,N input");
  rate_cmd->add_option("--out", rate_out, "output path");

  // sweep-gamma
  std::string sg_grid = "0:0.5:101";
  double sg_nth = 1.0;
  double sg_nbar = 1.0;
  int sg_grid_size = default_opts.grid_points;
  std::string sg_format = "csv";
  std::string sg_out;
  auto* sg_cmd = app.add_subcommand(
      "sweep-gamma", "Rates over a loss grid (CSV or JSON)");
  sg_cmd->add_option("--grid", sg_grid, "gamma grid start:stop:steps");
  sg_cmd->add_option("--nth", sg_nth, "environment photon number");
  sg_cmd->add_option("--nbar", sg_nbar, "input photon number");
  sg_cmd->add_option("--x-grid", sg_grid_size, "optimizer grid size");
  sg_cmd->add_option("--format", sg_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sg_cmd->add_option("--out", sg_out, "output path");

  // sweep-nbar
  std::string sn_grid = "0.05:5:100";
  double sn_eta = 0.81;
  double sn_gamma = 0.0;
  double sn_nth = 1.0;
  int sn_grid_size = default_opts.grid_points;
  std::string sn_format = "csv";
  std::string sn_out;
  auto* sn_cmd = app.add_subcommand(
      "sweep-nbar", "Rates over a photon-number grid (CSV or JSON)");
  sn_cmd->add_option("--grid", sn_grid, "n_bar grid start:stop:steps");
  auto* sn_eta_opt =
      sn_cmd->add_option("--eta", sn_eta, "transmissivity in [0, 1]");
  auto* sn_gamma_opt =
      sn_cmd->add_option("--gamma", sn_gamma, "loss probability 1 - eta");
  sn_eta_opt->excludes(sn_gamma_opt);
  sn_gamma_opt->excludes(sn_eta_opt);
  sn_cmd->add_option("--nth", sn_nth, "environment photon number");
  sn_cmd->add_option("--x-grid", sn_grid_size, "optimizer grid size");
  sn_cmd->add_option("--format", sn_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sn_cmd->add_option("--out", sn_out, "output path");

  // thresholds
  double th_eta = 0.0;
  double th_gamma = 0.0;
  double th_nth = 1.0;
  double th_nbar = 1.0;
  int th_grid_size = default_opts.grid_points;
  std::string th_out;
  auto* th_cmd = app.add_subcommand(
      "thresholds", "Crossover thresholds gamma* and n_bar* (JSON)");
  auto* th_eta_opt = th_cmd->add_option(
      "--eta", th_eta, "transmissivity; enables the n_bar* scan");
  auto* th_gamma_opt =
      th_cmd->add_option("--gamma", th_gamma, "loss probability 1 - eta");
  th_eta_opt->excludes(th_gamma_opt);
  th_gamma_opt->excludes(th_eta_opt);
  th_cmd->add_option("--nth", th_nth, "environment photon number");
  th_cmd->add_option("--nbar", th_nbar, "input photon number for gamma*");
  th_cmd->add_option("--x-grid", th_grid_size, "optimizer grid size");
  th_cmd->add_option("--out", th_out, "output path");

  // compile
  int co_modes = 0;
  std::string co_out;
  auto* co_cmd = app.add_subcommand(
      "compile", "Compile the N-mode Fourier transform to a gate list");
  co_cmd->add_option("--modes", co_modes, "mode count (power of two)")
      ->required();
  co_cmd->add_option("--out", co_out, "circuit output path");

  // selfcheck
  auto* self_cmd =
      app.add_subcommand("selfcheck", "Run the built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  if (rate_cmd->parsed()) {
    return run_guarded([&]() -> int {
      if (rate_eta_opt->count() == 0 && rate_gamma_opt->count() == 0) {
        throw std::invalid_argument("rate: provide --eta or --gamma");
      }
      const double eta =
          rate_gamma_opt->count() > 0 ? 1.0 - rate_gamma : rate_eta;
      gausscap::OptimizerOptions opts;
      opts.grid_points = rate_grid_size;
      std::optional<std::pair<int, int>> check;
      if (!rate_check.empty()) {
        check = parse_check_mn(rate_check);
      }
      const json report =
          gausscap::rate_report(eta, rate_nth, rate_nbar, opts, check);
      return emit(report.dump(2) + "\n",
                  resolve_output(rate_out, "rate.json"));
    });
  }
  if (sg_cmd->parsed()) {
    return run_guarded([&]() -> int {
      gausscap::OptimizerOptions opts;
      opts.grid_points = sg_grid_size;
      const std::vector<gausscap::SweepRow> rows = gausscap::sweep_gamma(
          gausscap::parse_grid(sg_grid), sg_nth, sg_nbar, opts);
      const bool csv = sg_format == "csv";
      const std::string payload =
          csv ? gausscap::rows_to_csv(rows, "gamma")
              : gausscap::rows_to_json(rows, "gamma").dump(2) + "\n";
      return emit(payload,
                  resolve_output(
                      sg_out, csv ? "sweep-gamma.csv" : "sweep-gamma.json"));
    });
  }
  if (sn_cmd->parsed()) {
    return run_guarded([&]() -> int {
      const double eta = sn_gamma_opt->count() > 0 ? 1.0 - sn_gamma : sn_eta;
      gausscap::OptimizerOptions opts;
      opts.grid_points = sn_grid_size;
      const std::vector<gausscap::SweepRow> rows = gausscap::sweep_nbar(
          gausscap::parse_grid(sn_grid), eta, sn_nth, opts);
      const bool csv = sn_format == "csv";
      const std::string payload =
          csv ? gausscap::rows_to_csv(rows, "n_bar")
              : gausscap::rows_to_json(rows, "n_bar").dump(2) + "\n";
      return emit(payload,
                  resolve_output(
                      sn_out, csv ? "sweep-nbar.csv" : "sweep-nbar.json"));
    });
  }
  if (th_cmd->parsed()) {
    return run_guarded([&]() -> int {
      std::optional<double> eta;
      if (th_eta_opt->count() > 0) {
        eta = th_eta;
      } else if (th_gamma_opt->count() > 0) {
        eta = 1.0 - th_gamma;
      }
      gausscap::OptimizerOptions opts;
      opts.grid_points = th_grid_size;
      const json report =
          gausscap::thresholds_report(eta, th_nth, th_nbar, opts);
      return emit(report.dump(2) + "\n",
                  resolve_output(th_out, "thresholds.json"));
    });
  }
  if (co_cmd->parsed()) {
    return run_guarded([&]() -> int {
      const gausscap::GaussianCircuit circuit = gausscap::compile_gft(co_modes);
      const gausscap::Matrix deviation =
          gausscap::circuit_to_symplectic(circuit) -
          gausscap::gft_symplectic(co_modes);
      const json metrics{{"modes", co_modes},
                         {"gate_count", circuit.gate_count()},
                         {"depth", circuit.depth()},
                         {"max_abs_deviation",
                          deviation.cwiseAbs().maxCoeff()}};
      const std::optional<std::string> path = resolve_output(
          co_out, "gft_" + std::to_string(co_modes) + ".txt");
      const int rc = emit(gausscap::circuit_to_text(circuit), path);
      if (rc != 0) {
        return rc;
      }
      // Metrics go to stdout when the circuit went to a file, to stderr when
      // the circuit itself occupies stdout.
      const std::string metrics_text = metrics.dump(2) + "\n";
      if (path.has_value()) {
        std::fwrite(metrics_text.data(), 1, metrics_text.size(), stdout);
      } else {
        std::fputs(metrics_text.c_str(), stderr);
      }
      return 0;
    });
  }
  if (self_cmd->parsed()) {
    return run_guarded([&]() -> int { return run_selfcheck(); });
  }
  std::fprintf(stderr, "error: no subcommand selected\n");
  return 2;
}
