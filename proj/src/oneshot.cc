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

#include "entshare/oneshot.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entshare/choi.h"
#include "entshare/optimize.h"

namespace entshare {
namespace {

constexpr double kEntanglementBreakingEdge = 0.5 + 1e-12;

double max_spectrum_difference(const EigenDecomposition<4>& a, const EigenDecomposition<4>& b) {
  double out = 0;
  for (int k = 0; k < 4; ++k) out = std::max(out, std::abs(a.values[k] - b.values[k]));
  return out;
}

double trace_orthogonality_residual(const KrausChannel& extracted, const ChoiState& j) {
  double out = 0;
  const auto& k = extracted.kraus();
  // kraus_from_choi keeps eigenvalues in descending order, dropping the
  // negligible tail, so operator m pairs with eigenvalue m.
  for (std::size_t a = 0; a < k.size(); ++a) {
    for (std::size_t b = 0; b < k.size(); ++b) {
      const cplx inner = (k[a].adjoint() * k[b]).trace();
      const double expected =
          a == b ? 2 * std::sqrt(std::max(0.0, j.eig().values[a]) * std::max(0.0, j.eig().values[b])) : 0.0;
      out = std::max(out, std::abs(inner - expected));
    }
  }
  return out;
}

}  // namespace

OptimalFraction optimal_singlet_fraction(const KrausChannel& c) {
  OptimalFraction out;
  out.raw_lambda_max = choi(c).lambda_max();
  out.entanglement_breaking = out.raw_lambda_max <= kEntanglementBreakingEdge;
  out.value = std::clamp(out.raw_lambda_max, 0.5, 1.0);
  return out;
}

OptimalInput optimal_input_state(const KrausChannel& c) {
  const ChoiState d = dual_choi(c);
  OptimalInput out;
  out.psi0 = d.eig().vector(0);
  out.schmidt = schmidt(out.psi0);
  out.degenerate = d.eig().values[0] - d.eig().values[1] < kDegeneracyGap;
  return out;
}

double preprocessed_fidelity(const KrausChannel& c) { return dual_choi(c).lambda_max(); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kConsistent:
      return "consistent";
    case Verdict::kFalsified:
      return "falsified";
    case Verdict::kIndeterminate:
      return "indeterminate";
  }
  return "unknown";
}

Classification classify(const KrausChannel& c) {
  Classification out;
  out.unitality = is_unital(c);
  const OptimalInput input = optimal_input_state(c);
  out.psi0_schmidt = input.schmidt.lambda();
  out.psi0_maximally_entangled = std::abs(out.psi0_schmidt - 0.5) < kMaximallyEntangledTolerance;
  if (input.degenerate) {
    out.verdict = Verdict::kIndeterminate;
  } else {
    out.verdict = out.psi0_maximally_entangled == out.unitality.unital ? Verdict::kConsistent
                                                                         : Verdict::kFalsified;
  }
  return out;
}

NegativityRelation negativity_relation_residual(const KrausChannel& c) {
  const ChoiState j = choi(c);
  NegativityRelation out;
  out.asserted = j.lambda_max() > kEntanglementBreakingEdge;
  out.residual = std::abs(j.lambda_max() - 0.5 * (1 + negativity(j.matrix())));
  return out;
}

double negativity_at_input(const KrausChannel& c, const Vec4& psi) {
  return negativity(apply_to_half(c, psi));
}

ChannelNegativity channel_negativity(const KrausChannel& c, const NegativityOptions& options) {
  constexpr double kPi = std::numbers::pi;
  const ChoiState j = choi(c);
  const Mat4 choi_matrix = j.matrix();

  auto filter_of = [](std::span<const double> x) {
    const double l = std::clamp(x[0], 0.0, 1.0);
    Mat2 w = Mat2::Zero();
    w(0, 0) = std::sqrt(l);
    w(1, 1) = std::sqrt(1 - l);
    return Mat2(w * su2_from_euler(x[1], x[2], x[3]).transpose());
  };
  const Objective objective = [&](std::span<const double> x) {
    const Mat4 k = tensor_product(filter_of(x), Mat2::Identity().eval());
    const Mat4 filtered = k * choi_matrix * k.adjoint();
    const double p = filtered.trace().real();
    if (p <= 0) return 0.0;
    return negativity(filtered / p);
  };
  const StartSampler sampler = [](int index, std::mt19937_64& rng) {
    if (index == 0) return std::vector<double>{0.5, 0, 0, 0};
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> turn(0.0, 2 * kPi);
    std::uniform_real_distribution<double> half_turn(0.0, kPi);
    const double l = unit(rng);
    const double a = turn(rng);
    const double b = half_turn(rng);
    const double g = turn(rng);
    return std::vector<double>{l, a, b, g};
  };
  RestartOptions restart;
  restart.restarts = options.restarts;
  restart.seed = options.seed;
  restart.workers = options.workers;
  restart.search.initial_step = 0.25;
  restart.search.min_step = 1e-7;
  restart.search.max_evaluations = options.max_evaluations;
  const SearchResult best = multi_start_search(objective, sampler, restart);

  ChannelNegativity out;
  out.choi_negativity = negativity(choi_matrix);
  out.value = std::max(best.value, out.choi_negativity);
  const double l = std::clamp(best.x[0], 0.0, 1.0);
  out.schmidt_lambda = std::max(l, 1 - l);
  out.bob_unitary = su2_from_euler(best.x[1], best.x[2], best.x[3]);
  Vec4 base = Vec4::Zero();
  base(0) = std::sqrt(l);
  base(3) = std::sqrt(1 - l);
  out.input_state = tensor_product(Mat2::Identity().eval(), out.bob_unitary) * base;
  if (best.value < out.choi_negativity) {
    out.schmidt_lambda = 0.5;
    out.bob_unitary = Mat2::Identity();
    out.input_state = phi_plus();
  }
  return out;
}

ChannelReport report(const KrausChannel& c, const ReportOptions& options) {
  require_valid(c);
  const ChoiState j = choi(c);
  const ChoiState d = dual_choi(c);

  ChannelReport out(c);
  out.fraction = optimal_singlet_fraction(c);
  out.input = optimal_input_state(c);
  out.classification = classify(c);
  out.teleportation_fidelity = teleportation_fidelity(out.fraction.value);
  out.choi_negativity = negativity(j.matrix());
  out.channel_negativity = channel_negativity(c, options.negativity);
  out.optimal_input_negativity = negativity_at_input(c, out.input.psi0);
  out.preprocessed_fidelity = d.lambda_max();
  out.gap = choi_state_gap(c, options.fstar);

  auto& r = out.residuals;
  r["dual_swap_entrywise"] = (d.matrix() - swap_conjugate(j.matrix())).cwiseAbs().maxCoeff();
  r["dual_swap_spectrum"] = max_spectrum_difference(j.eig(), d.eig());
  r["pt_spectrum_sum"] = std::abs(pt_spectrum_residual(j.matrix()));
  if (!out.fraction.entanglement_breaking) {
    r["fraction_negativity"] = negativity_relation_residual(c).residual;
  }
  r["optimal_fraction"] = std::abs(max_entangled_overlap(apply_to_half(c, out.input.psi0)) -
                           out.fraction.raw_lambda_max);
  const KrausChannel extracted = kraus_from_choi(j);
  r["kraus_trace_orthogonality"] = trace_orthogonality_residual(extracted, j);
  r["kraus_round_trip"] = (choi_matrix(extracted.kraus()) - j.matrix()).norm();
  r["eigenvector_correspondence"] = eigenvector_correspondence_check(c).max_residual;
  return out;
}

}  // namespace entshare
