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

#include "entshare/audit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "entshare/channel_io.h"
#include "entshare/choi.h"
#include "entshare/entmetrics.h"
#include "entshare/locc.h"
#include "entshare/oneshot.h"
#include "entshare/optimize.h"

namespace entshare {
namespace {

struct CheckSpec {
  const char* name;
  bool margin;
  double threshold;
};

enum CheckId {
  kCptp,
  kDualSwapEntrywise,
  kDualSwapSpectrum,
  kPtSpectrum,
  kFractionNegativity,
  kOptimalFraction,
  kOptimalFractionOracle,
  kUnitalInput,
  kNonunitalInput,
  kUnitalGap,
  kNonunitalGap,
  kGapSign,
  kKrausOrthogonality,
  kRoundTrip,
  kCorrespondence,
  kOracleFstar,
  kOracleSingletFraction,
  kOracleGridBound,
  kCheckCount
};

constexpr CheckSpec kChecks[kCheckCount] = {
    {"cptp", false, 1e-9},
    {"dual_swap_entrywise", false, 1e-12},
    {"dual_swap_spectrum", false, 1e-10},
    {"pt_spectrum_sum", false, 1e-10},
    {"fraction_negativity", false, 1e-10},
    {"optimal_fraction", false, 1e-9},
    {"optimal_fraction_filter_oracle", false, 1e-5},
    {"unital_input_schmidt", false, 1e-7},
    {"nonunital_input_margin", true, 1e-9},
    {"unital_choi_gap", false, 1e-6},
    {"nonunital_choi_gap", true, 1e-6},
    {"choi_state_gap_sign", false, 1e-9},
    {"kraus_trace_orthogonality", false, 1e-9},
    {"kraus_round_trip", false, 1e-9},
    {"eigenvector_correspondence", false, 1e-9},
    {"oracle_fstar_vs_filter", false, 1e-4},
    {"oracle_singlet_fraction_vs_grid", false, 1e-6},
    {"oracle_grid_upper_bound", false, 1e-9},
};

// Thresholds on the unitality deviation below which the strict claims are
// not asserted.
constexpr double kInputDeviation = 1e-3;
constexpr double kGapDeviation = 1e-2;

struct Observation {
  CheckId id;
  double value;
};

std::vector<Observation> observe(const KrausChannel& c) {
  std::vector<Observation> out;
  const ValidationReport v = validate(c);
  out.push_back({kCptp, std::max(v.tp_residual, std::max(0.0, -v.cp_min_eigenvalue))});
  if (!v.ok) return out;

  const ChannelReport r = report(c);
  const auto residual = [&r](const char* key) { return r.residuals.at(key); };
  out.push_back({kDualSwapEntrywise, residual("dual_swap_entrywise")});
  out.push_back({kDualSwapSpectrum, residual("dual_swap_spectrum")});
  out.push_back({kPtSpectrum, residual("pt_spectrum_sum")});
  if (r.residuals.contains("fraction_negativity")) out.push_back({kFractionNegativity, residual("fraction_negativity")});
  out.push_back({kOptimalFraction, residual("optimal_fraction")});
  out.push_back({kKrausOrthogonality, residual("kraus_trace_orthogonality")});
  out.push_back({kRoundTrip, residual("kraus_round_trip")});
  out.push_back({kCorrespondence, residual("eigenvector_correspondence")});

  const Mat4 rho0 = apply_to_half(c, r.input.psi0);
  out.push_back(
      {kOptimalFractionOracle, std::abs(fstar_filter_oracle(rho0).fstar_value - r.fraction.value)});

  const Unitality& u = r.classification.unitality;
  if (!r.input.degenerate) {
    const double lambda = r.input.schmidt.lambda();
    if (u.unital) out.push_back({kUnitalInput, std::abs(lambda - 0.5)});
    if (u.deviation > kInputDeviation) out.push_back({kNonunitalInput, lambda - 0.5});
  }
  if (r.gap.defined) {
    if (u.unital) out.push_back({kUnitalGap, std::abs(r.gap.gap)});
    if (u.deviation > kGapDeviation) out.push_back({kNonunitalGap, r.gap.gap});
    out.push_back({kGapSign, std::max(0.0, -r.gap.gap)});
  }

  const Mat4 j = choi(c).matrix();
  const double via_fstar = fstar(j);
  out.push_back({kOracleFstar, std::abs(via_fstar - fstar_filter_oracle(j).fstar_value)});

  GridOracleOptions grid;
  grid.grid_step_degrees = 6.0;
  const GridOracleResult g = singlet_fraction_oracle(j, grid);
  const double sf = singlet_fraction(j).value;
  out.push_back({kOracleSingletFraction, std::abs(sf - g.refined_value)});
  out.push_back({kOracleGridBound, std::max(0.0, std::max(g.grid_value, g.refined_value) - sf)});
  return out;
}

bool violates(const CheckSpec& spec, double value) {
  if (!std::isfinite(value)) return true;
  return spec.margin ? !(value > spec.threshold) : !(value <= spec.threshold);
}

std::string write_repro(const AuditOptions& options, int index, const KrausChannel& c,
                        const std::vector<Violation>& violations) {
  nlohmann::json doc;
  doc["seed"] = options.seed;
  doc["index"] = index;
  doc["channel"] = channel_to_json(c);
  nlohmann::json list = nlohmann::json::array();
  for (const Violation& v : violations) {
    if (v.index != index) continue;
    list.push_back({{"check", v.check}, {"value", v.value}, {"threshold", v.threshold}});
  }
  doc["violations"] = list;
  std::filesystem::create_directories(options.repro_dir);
  const std::filesystem::path path = std::filesystem::path(options.repro_dir) /
                                     ("audit_repro_seed" + std::to_string(options.seed) + "_index" +
                                      std::to_string(index) + ".json");
  std::ofstream(path) << doc.dump(2) << "\n";
  return path.string();
}

}  // namespace

KrausChannel audit_channel(std::uint64_t seed, int index) {
  const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(index));
  if (index % 5 == 4) return random_pauli_channel(s);
  return random_channel(s, index % 4 + 1);
}

AuditResult run_audit(const AuditOptions& options) {
  if (options.count < 1) throw std::invalid_argument("audit count must be >= 1");
  std::vector<std::vector<Observation>> observations(options.count);
  parallel_for(options.count, options.workers, [&](int i) {
    observations[i] = observe(audit_channel(options.seed, i));
  });

  AuditResult out;
  for (const CheckSpec& spec : kChecks) {
    CheckSummary s;
    s.name = spec.name;
    s.margin = spec.margin;
    s.threshold = spec.threshold;
    s.worst = spec.margin ? INFINITY : 0.0;
    out.checks.push_back(s);
  }
  for (int i = 0; i < options.count; ++i) {
    for (const Observation& o : observations[i]) {
      const CheckSpec& spec = kChecks[o.id];
      CheckSummary& s = out.checks[o.id];
      ++s.evaluated;
      s.worst = spec.margin ? std::min(s.worst, o.value) : std::max(s.worst, o.value);
      if (violates(spec, o.value)) {
        ++s.violations;
        out.violations.push_back({i, spec.name, o.value, spec.threshold});
      }
    }
  }
  if (options.write_repro) {
    int last = -1;
    for (const Violation& v : out.violations) {
      if (v.index == last) continue;
      last = v.index;
      out.repro_files.push_back(
          write_repro(options, v.index, audit_channel(options.seed, v.index), out.violations));
    }
  }
  return out;
}

std::string format_audit(const AuditResult& result) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-34s %-6s %-12s %-10s %5s  %s\n", "check", "kind", "worst",
                "threshold", "n", "status");
  out << line;
  for (const CheckSummary& s : result.checks) {
    if (s.evaluated == 0) {
      std::snprintf(line, sizeof line, "%-34s %-6s %-12s %-10.0e %5d  %s\n", s.name.c_str(),
                    s.margin ? "min>" : "max<=", "-", s.threshold, 0, "skipped");
    } else {
      std::snprintf(line, sizeof line, "%-34s %-6s %-12.3e %-10.0e %5d  %s\n", s.name.c_str(),
                    s.margin ? "min>" : "max<=", s.worst, s.threshold, s.evaluated,
                    s.passed() ? "pass" : "FAIL");
    }
    out << line;
  }
  return out.str();
}

}  // namespace entshare
