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

#include "entshare/locc.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entshare/choi.h"
#include "entshare/entmetrics.h"
#include "entshare/optimize.h"

namespace entshare {
namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kGainFloor = 1e-14;

Mat4 separable_fallback() {
  Mat4 s = Mat4::Zero();
  s(0, 0) = s(3, 3) = 0.5;
  return s;
}

}  // namespace

FstarResult fstar_detail(const Mat4& rho, const FstarOptions& options) {
  require_density_matrix(rho);
  const Mat4 pt = partial_transpose(rho);

  // Seed: the maximally entangled projector minimizing <a|rho^Gamma|a>.
  const double lmin = symmetric_min_eig(magic_real_part(pt), nullptr);

  // Bob's filter K = exp(-i (x0 X + x1 Y) / 2) diag(1, cos x2). A z-rotation
  // to the right of the diagonal commutes with it and is absorbed by the
  // inner maximally entangled state, so two rotation angles suffice.
  auto filter_of = [](std::span<const double> x) {
    const double r = std::hypot(x[0], x[1]);
    Mat2 k = std::cos(r / 2) * Mat2::Identity();
    if (r > 0) k -= cplx(0, std::sin(r / 2) / r) * (x[0] * pauli(1) + x[1] * pauli(2));
    k.col(1) *= std::cos(x[2]);
    return k;
  };
  // Inner problem: the best maximally entangled |psi> for a fixed K is an
  // exact real eigenproblem in the magic basis.
  auto inner = [&](std::span<const double> x, Eigen::Vector4d* vec) {
    const Mat4 k = tensor_product(Mat2::Identity().eval(), filter_of(x));
    return symmetric_min_eig(magic_real_part(k.adjoint() * pt * k), vec);
  };
  const Objective objective = [&](std::span<const double> x) { return -inner(x, nullptr); };
  const StartSampler sampler = [](int index, std::mt19937_64& rng) {
    if (index == 0) return std::vector<double>{0, 0, 0};
    std::uniform_real_distribution<double> axis(-kPi, kPi);
    std::uniform_real_distribution<double> quarter(0.0, kPi / 2);
    const double a = axis(rng);
    const double b = axis(rng);
    return std::vector<double>{a, b, quarter(rng)};
  };

  RestartOptions restart;
  restart.restarts = options.restarts;
  restart.seed = options.seed;
  restart.workers = options.workers;
  restart.search.initial_step = 0.5;
  restart.search.min_step = 1e-8;
  restart.search.max_evaluations = options.max_evaluations;
  const SearchResult best = multi_start_search(objective, sampler, restart);

  FstarResult out;
  out.maximally_entangled_value = std::max(0.5, 0.5 - lmin);
  const double gain = std::max(best.value, -lmin);
  // Gains at eigensolver roundoff (product witnesses on separable states)
  // count as none.
  if (gain <= kGainFloor) {
    out.value = 0.5;
    out.clamped = true;
    return out;
  }
  out.value = 0.5 + gain;
  const std::vector<double> at = best.value >= -lmin ? best.x : std::vector<double>{0, 0, 0};
  Eigen::Vector4d psi;
  inner(at, &psi);
  out.witness = tensor_product(Mat2::Identity().eval(), filter_of(at)) * magic_basis() * psi.cast<cplx>();
  return out;
}

double fstar(const Mat4& rho, const FstarOptions& options) { return fstar_detail(rho, options).value; }

FilterProtocol evaluate_filter(const Mat4& rho, const Mat2& filter) {
  FilterProtocol out;
  out.filter = filter;
  const Mat4 k = tensor_product(filter, Mat2::Identity().eval());
  const Mat4 filtered = k * rho * k.adjoint();
  out.success_probability = filtered.trace().real();
  if (out.success_probability <= 0) {
    out.success_probability = 0;
    out.success_state = separable_fallback();
    out.fstar_value = 0.5;
    return out;
  }
  out.success_state = filtered / out.success_probability;
  out.fstar_value = max_entangled_overlap(filtered) + (1 - out.success_probability) / 2;
  return out;
}

FilterProtocol fstar_filter_oracle(const Mat4& rho, const FilterOracleOptions& options) {
  require_density_matrix(rho);
  // A = U diag(1, s) V^dagger. U is a local unitary after the filter and
  // leaves the singlet fraction unchanged; so does the z-rotation part of
  // V^dagger, which commutes through the diagonal. What is left is
  // diag(1, cos x2) exp(-i (x0 X + x1 Y) / 2).
  auto filter_of = [](std::span<const double> x) {
    const double r = std::hypot(x[0], x[1]);
    Mat2 rot = std::cos(r / 2) * Mat2::Identity();
    if (r > 0) rot -= cplx(0, std::sin(r / 2) / r) * (x[0] * pauli(1) + x[1] * pauli(2));
    rot.row(1) *= std::cos(x[2]);
    return rot;
  };
  const Objective objective = [&](std::span<const double> x) {
    const Mat4 k = tensor_product(filter_of(x), Mat2::Identity().eval());
    const Mat4 filtered = k * rho * k.adjoint();
    return max_entangled_overlap(filtered) + (1 - filtered.trace().real()) / 2;
  };
  const StartSampler sampler = [](int index, std::mt19937_64& rng) {
    if (index == 0) return std::vector<double>{0, 0, 0};
    std::uniform_real_distribution<double> axis(-kPi, kPi);
    std::uniform_real_distribution<double> quarter(0.0, kPi / 2);
    const double a = axis(rng);
    const double b = axis(rng);
    return std::vector<double>{a, b, quarter(rng)};
  };
  RestartOptions restart;
  restart.restarts = options.restarts;
  restart.seed = options.seed;
  restart.workers = options.workers;
  restart.search.initial_step = 0.5;
  restart.search.min_step = 1e-8;
  restart.search.max_evaluations = options.max_evaluations;
  const SearchResult best = multi_start_search(objective, sampler, restart);

  if (best.value <= 0.5 + kGainFloor) return evaluate_filter(rho, Mat2::Zero());
  return evaluate_filter(rho, filter_of(best.x));
}

ChoiGap choi_state_gap(const KrausChannel& c, const FstarOptions& options) {
  const ChoiState j = choi(c);
  ChoiGap out;
  if (j.lambda_max() <= 0.5 + 1e-12) return out;
  out.defined = true;
  out.fstar_choi = fstar(j.matrix(), options);
  out.gap = j.lambda_max() - out.fstar_choi;
  out.strict = out.gap > kStrictGap;
  return out;
}

}  // namespace entshare
