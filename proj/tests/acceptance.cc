// Copyright 2026 The entshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance <path-to-entshare-cli>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "entshare/channel.h"
#include "entshare/choi.h"
#include "entshare/entmetrics.h"
#include "entshare/locc.h"
#include "entshare/oneshot.h"
#include "entshare/optimize.h"
#include "test_util.h"

namespace entshare {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kMasterSeed = 20260;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << " first failure: " << what << ";";
      pass = false;
    }
  }
};

KrausChannel random_channel_k(std::uint64_t stream, int k) {
  return random_channel(derive_seed(kMasterSeed + stream, k), k % 4 + 1);
}

std::vector<KrausChannel> thousand_channels() {
  std::vector<KrausChannel> out;
  for (int k = 0; k < 1000; ++k) out.push_back(random_channel_k(0, k));
  return out;
}

Vec4 schmidt_input(double lambda) {
  Vec4 v = Vec4::Zero();
  v(0) = std::sqrt(lambda);
  v(3) = std::sqrt(1 - lambda);
  return v;
}

void criterion1(Outcome& o) {
  double worst_schmidt = 0, worst_value = 0, worst_grid_excess = -1, slowest = 0;
  for (const double p : {0.1, 0.3, 0.5, 0.9}) {
    const KrausChannel c = amplitude_damping(p);
    const auto start = Clock::now();
    const OptimalInput in = optimal_input_state(c);
    const OptimalFraction f = optimal_singlet_fraction(c);
    const double lmax = choi(c).lambda_max();
    slowest = std::max(slowest, seconds_since(start));

    worst_schmidt = std::max({worst_schmidt, std::abs(in.schmidt.coefficients[0] - 1 / (2 - p)),
                              std::abs(in.schmidt.coefficients[1] - (1 - p) / (2 - p))});
    worst_value = std::max({worst_value, std::abs(f.value - (1 - p / 2)), std::abs(lmax - (1 - p / 2))});
    const testing::InputGridResult grid = testing::input_grid_oracle(c, 40, 15.0);
    worst_grid_excess = std::max(worst_grid_excess, grid.best - lmax);
  }
  o.require(worst_schmidt < 1e-9, "Schmidt coefficients");
  o.require(worst_value < 1e-9, "F = lambda_max = 1 - p/2");
  o.require(worst_grid_excess <= 1e-6, "input grid exceeds lambda_max");
  o.require(slowest < 1.0, "runtime per point");
  o.detail << " schmidt_err=" << worst_schmidt << " value_err=" << worst_value
           << " grid_excess=" << worst_grid_excess << " slowest_point=" << slowest << "s";
}

void criterion2(Outcome& o) {
  const auto start = Clock::now();
  double worst = 0, min_margin = 1;
  for (int i = 0; i < 50; ++i) {
    const double p = i / 49.0;
    const KrausChannel c = amplitude_damping(p);
    const double n_choi = negativity(choi(c).matrix());
    const double n_chi = negativity(apply_to_half(c, schmidt_input(1 / (2 - p))));
    worst = std::max({worst, std::abs(n_choi - (std::sqrt(p * p / 4 + 1 - p) - p / 2)),
                      std::abs(n_chi - (1 - p) / (2 - p) * (std::sqrt(p * p + 4) - p))});
    if (p >= 0.05 && p <= 0.95) {
      min_margin = std::min(min_margin, channel_negativity(c).value - n_choi);
    }
  }
  const double elapsed = seconds_since(start);
  o.require(worst < 1e-9, "negativity closed forms");
  o.require(min_margin > 1e-4, "N(Phi+) < N(Lambda) margin");
  o.require(elapsed < 5.0, "runtime");
  o.detail << " formula_err=" << worst << " min_margin=" << min_margin << " time=" << elapsed << "s";
}

void criterion3(Outcome& o, const std::vector<KrausChannel>& channels) {
  const auto start = Clock::now();
  double worst = 0;
  for (const KrausChannel& c : channels) {
    const Mat4 j = choi(c).matrix();
    const Mat4 pt = partial_transpose(j, Subsystem::kSecond);
    // Eigen's own solver, independent of the library's Jacobi routine.
    const Eigen::SelfAdjointEigenSolver<Mat4> a(j, Eigen::EigenvaluesOnly);
    const Eigen::SelfAdjointEigenSolver<Mat4> b(pt, Eigen::EigenvaluesOnly);
    worst = std::max(worst, std::abs(b.eigenvalues()(0) + a.eigenvalues()(3) - 0.5));
    worst = std::max(worst, std::abs(pt_spectrum_residual(j)));
  }
  const double elapsed = seconds_since(start);
  o.require(worst < 1e-10, "lambda_min(J^Gamma) + lambda_max(J) = 1/2");
  o.require(elapsed < 10.0, "runtime");
  o.detail << " worst=" << worst << " time=" << elapsed << "s";
}

void criterion4(Outcome& o, const std::vector<KrausChannel>& channels) {
  double entrywise = 0, spectrum = 0;
  for (const KrausChannel& c : channels) {
    const ChoiState j = choi(c);
    const ChoiState d = dual_choi(c);
    entrywise = std::max(entrywise, (d.matrix() - swap_conjugate(j.matrix())).cwiseAbs().maxCoeff());
    for (int k = 0; k < 4; ++k) {
      spectrum = std::max(spectrum, std::abs(j.eig().values[k] - d.eig().values[k]));
    }
  }
  o.require(entrywise < 1e-12, "entrywise");
  o.require(spectrum < 1e-10, "spectra");
  o.detail << " entrywise=" << entrywise << " spectrum=" << spectrum;
}

void criterion5(Outcome& o, const std::vector<KrausChannel>& channels) {
  double worst = 0;
  int used = 0;
  for (const KrausChannel& c : channels) {
    const Mat4 j = choi(c).matrix();
    const double lmax = choi(c).lambda_max();
    if (lmax <= 0.5) continue;
    ++used;
    worst = std::max(worst, std::abs(lmax - 0.5 * (1 + negativity(j))));
  }
  o.require(used > 0, "no entangling channels sampled");
  o.require(worst < 1e-10, "lambda_max = (1 + N)/2");
  o.detail << " channels=" << used << " worst=" << worst;
}

void criterion6(Outcome& o) {
  const auto start = Clock::now();
  double worst_triple = 0, worst_excess = -1;
  for (int k = 0; k < 100; ++k) {
    const KrausChannel c = random_channel_k(6, k);
    const double lmax = choi(c).lambda_max();
    const double target = std::max(0.5, lmax);
    const Mat4 rho0 = apply_to_half(c, optimal_input_state(c).psi0);
    const double f = std::max(0.5, singlet_fraction(rho0).value);
    const double oracle = fstar_filter_oracle(rho0).fstar_value;
    worst_triple = std::max({worst_triple, std::abs(f - target), std::abs(oracle - target)});

    std::mt19937_64 rng(derive_seed(kMasterSeed + 66, k));
    for (int i = 0; i < 20; ++i) {
      const Vec4 psi = testing::random_pure(rng());
      const double value = fstar_filter_oracle(apply_to_half(c, psi)).fstar_value;
      worst_excess = std::max(worst_excess, value - target);
    }
  }
  o.require(worst_triple < 1e-5, "triple equality");
  o.require(worst_excess <= 1e-5, "non-optimal input exceeds lambda_max");
  o.detail << " triple_err=" << worst_triple << " max_excess=" << worst_excess
           << " time=" << seconds_since(start) << "s";
}

void criterion7(Outcome& o) {
  double unital_err = 0, nonunital_margin = 1;
  int unital = 0, nonunital = 0;
  for (int k = 0; unital < 100; ++k) {
    const KrausChannel c = random_pauli_channel(derive_seed(kMasterSeed + 7, k));
    const OptimalInput in = optimal_input_state(c);
    if (in.degenerate) continue;
    ++unital;
    unital_err = std::max(unital_err, std::abs(in.schmidt.lambda() - 0.5));
  }
  for (int k = 0; nonunital < 100; ++k) {
    const KrausChannel c = random_channel_k(77, k);
    if (is_unital(c).deviation <= 1e-3) continue;
    ++nonunital;
    nonunital_margin = std::min(nonunital_margin, optimal_input_state(c).schmidt.lambda() - 0.5);
  }
  o.require(unital_err < 1e-7, "unital Schmidt lambda = 1/2");
  o.require(nonunital_margin > 1e-9, "nonunital Schmidt lambda > 1/2");
  o.detail << " unital_err=" << unital_err << " nonunital_min_margin=" << nonunital_margin;
}

void criterion8(Outcome& o) {
  double min_gap = 1, unital_gap = 0;
  int nonunital = 0;
  int skipped_breaking = 0;
  for (int k = 0; nonunital < 100; ++k) {
    const KrausChannel c = random_channel_k(8, k);
    if (is_unital(c).deviation <= 1e-2) continue;
    const Mat4 j = choi(c).matrix();
    // The gap claim is about channels that can carry entanglement at all.
    if (choi(c).lambda_max() <= 0.5) {
      ++skipped_breaking;
      continue;
    }
    ++nonunital;
    min_gap = std::min(min_gap, optimal_singlet_fraction(c).value - fstar(j));
  }
  for (int k = 0; k < 100; ++k) {
    const KrausChannel c = random_pauli_channel(derive_seed(kMasterSeed + 88, k));
    const double gap = optimal_singlet_fraction(c).value - fstar(choi(c).matrix());
    unital_gap = std::max(unital_gap, std::abs(gap));
  }
  o.require(min_gap > 1e-6, "nonunital gap");
  o.require(unital_gap < 1e-6, "unital gap");
  o.detail << " nonunital_min_gap=" << min_gap << " unital_max_gap=" << unital_gap
           << " skipped_entanglement_breaking=" << skipped_breaking;
}

Mat4 random_state(std::uint64_t k) {
  const std::uint64_t seed = derive_seed(kMasterSeed + 9, k);
  // Half full-rank, half close to pure so that many are entangled.
  if (k % 2 == 0) return testing::random_density(seed);
  return 0.8 * projector<4>(testing::random_pure(seed)) + 0.2 * testing::random_density(seed + 1);
}

void criterion9(Outcome& o) {
  const auto start = Clock::now();
  double fstar_err = 0, grid_err = 0;
  GridOracleOptions grid;
  grid.grid_step_degrees = 2.0;
  grid.refine = false;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const Mat4 rho = random_state(k);
    fstar_err = std::max(fstar_err, std::abs(fstar(rho) - fstar_filter_oracle(rho).fstar_value));
    grid_err = std::max(grid_err, std::abs(singlet_fraction(rho).value -
                                           singlet_fraction_oracle(rho, grid).grid_value));
  }
  const double elapsed = seconds_since(start);
  o.require(fstar_err < 1e-4, "fstar vs filter oracle");
  o.require(grid_err < 1e-3, "singlet fraction vs grid");
  o.require(elapsed < 120.0, "runtime");
  o.detail << " fstar_err=" << fstar_err << " grid_err=" << grid_err << " time=" << elapsed << "s";
}

void criterion10(Outcome& o) {
  double orthogonality = 0, round_trip = 0;
  for (int k = 0; k < 200; ++k) {
    const KrausChannel c = random_channel_k(10, k);
    const ChoiState j = choi(c);
    const KrausChannel extracted = kraus_from_choi(j);
    const Eigen::SelfAdjointEigenSolver<Mat4> eig(j.matrix(), Eigen::EigenvaluesOnly);
    const auto& kraus = extracted.kraus();
    for (std::size_t a = 0; a < kraus.size(); ++a) {
      for (std::size_t b = 0; b < kraus.size(); ++b) {
        const cplx gram = (kraus[a].adjoint() * kraus[b]).trace();
        const double pa = eig.eigenvalues()(3 - a);
        const double pb = eig.eigenvalues()(3 - b);
        const double expected = a == b ? 2 * std::sqrt(pa * pb) : 0.0;
        orthogonality = std::max(orthogonality, std::abs(gram - expected));
      }
    }
    round_trip = std::max(round_trip, (choi_matrix(kraus) - j.matrix()).norm());
  }
  o.require(orthogonality < 1e-9, "trace orthogonality");
  o.require(round_trip < 1e-9, "Choi round trip");
  o.detail << " orthogonality=" << orthogonality << " round_trip=" << round_trip;
}

struct Command {
  int status = -1;
  std::string output;
};

Command run_command(const std::string& cmd) {
  Command out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.output.append(buf.data(), n);
  const int raw = pclose(pipe);
  out.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

void criterion11(Outcome& o, const std::string& cli) {
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return;
  }
  const auto start = Clock::now();
  const Command audit = run_command(cli + " audit --seed 42 --count 100 --out audit_repro 2>&1");
  const double audit_time = seconds_since(start);
  o.require(audit.status == 0, "audit exit status");
  o.require(audit_time < 60.0, "audit runtime");

  const std::string sweep = cli + " sweep --name amplitude_damping --from 0 --to 1 --steps 21"
                                  " --columns N_choi,N_channel,N_opt_input";
  const Command first = run_command(sweep);
  const Command second = run_command(sweep);
  o.require(first.status == 0 && second.status == 0, "sweep exit status");
  o.require(!first.output.empty() && first.output == second.output, "sweep byte-identical");

  // Interior points must show N(Phi+) < N(Lambda).
  std::istringstream in(first.output);
  std::string line;
  std::getline(in, line);
  int ordered = 0, rows = 0;
  while (std::getline(in, line)) {
    double p, n_choi, n_channel, n_opt;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &p, &n_choi, &n_channel, &n_opt) != 4) continue;
    if (p <= 0.0 || p >= 1.0) continue;
    ++rows;
    if (n_channel > n_choi && n_opt > n_choi) ++ordered;
  }
  o.require(rows == 19 && ordered == rows, "sweep ordering");
  o.detail << " audit_status=" << audit.status << " audit_time=" << audit_time
           << "s sweep_identical=" << (first.output == second.output) << " ordered_rows=" << ordered
           << "/" << rows;
}

}  // namespace
}  // namespace entshare

int main(int argc, char** argv) {
  using namespace entshare;
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<KrausChannel> channels = thousand_channels();

  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"amplitude damping optimum", criterion1},
      {"amplitude damping negativities", criterion2},
      {"lambda_min(J^Gamma) + lambda_max(J) = 1/2", [&](Outcome& o) { criterion3(o, channels); }},
      {"dual Choi = swap-conjugate", [&](Outcome& o) { criterion4(o, channels); }},
      {"lambda_max = (1 + N)/2", [&](Outcome& o) { criterion5(o, channels); }},
      {"optimal fraction triple equality", criterion6},
      {"optimal input Schmidt coefficient", criterion7},
      {"one-shot vs Choi-state gap", criterion8},
      {"oracle equivalence", criterion9},
      {"Kraus extraction", criterion10},
      {"end-to-end CLI", [&](Outcome& o) { criterion11(o, cli); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    o.detail.precision(3);
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "):" << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
