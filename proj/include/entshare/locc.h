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

#ifndef ENTSHARE_LOCC_H_
#define ENTSHARE_LOCC_H_

// F*: the largest singlet fraction reachable from a two-qubit state with
// trace-preserving LOCC.
//
// Two routes are provided and are meant to be checked against each other:
//
//  * fstar() solves the semidefinite program
//        maximize 1/2 - Tr(X rho^Gamma)
//        s.t. 0 <= X <= I, -I/2 <= X^Gamma <= I/2
//    restricted to its rank-one optima. Every feasible rank-one X is, up to
//    local unitaries, c * P(sqrt(l)|00> + sqrt(1-l)|11>) with
//    c * max(l, 1-l) <= 1/2, i.e. X = |a><a| with
//        a = (I (x) K)|psi>,  K = V diag(1, t),  |psi> maximally entangled.
//    For fixed K the best |psi> is a real eigenproblem in the magic basis;
//    the outer search runs over K and is seeded at K = I.
//
//  * fstar_filter_oracle() searches one-way filtering protocols directly:
//    Alice applies A = U diag(1, s) V^dagger; on success the parties keep
//    (A (x) I) rho (A (x) I)^dagger / p, on failure they prepare a separable
//    state with overlap 1/2 with |Phi+>.

#include <cstdint>

#include "entshare/channel.h"
#include "entshare/linalg.h"

namespace entshare {

struct FstarOptions {
  int restarts = 16;
  std::uint64_t seed = 0xf5a2;
  int max_evaluations = 40000;  // shared across restarts
  int workers = 1;
};

struct FstarResult {
  double value = 0.5;
  // The optimal rank-one X = |a><a| (unnormalized a). Zero when the
  // separable value 1/2 is optimal.
  Vec4 witness = Vec4::Zero();
  // Value of the t = 1 seed alone, max(1/2, 1/2 - lambda_min(Re magic(rho^Gamma))).
  double maximally_entangled_value = 0.5;
  bool clamped = false;
};

FstarResult fstar_detail(const Mat4& rho, const FstarOptions& options = {});
double fstar(const Mat4& rho, const FstarOptions& options = {});

struct FilterProtocol {
  Mat2 filter = Mat2::Identity();
  double success_probability = 1;
  Mat4 success_state = Mat4::Zero();
  double fstar_value = 0;
};

struct FilterOracleOptions {
  int restarts = 32;
  std::uint64_t seed = 0xf117;
  int max_evaluations = 64000;  // shared across restarts
  int workers = 1;
};

/// When no filter beats 1/2 the returned protocol is the "always fail" one:
/// zero filter, success probability 0, success_state = the separable
/// fallback (|00><00| + |11><11|) / 2.
FilterProtocol fstar_filter_oracle(const Mat4& rho, const FilterOracleOptions& options = {});

/// p F(rho_1) + (1 - p) / 2 for the given filter.
FilterProtocol evaluate_filter(const Mat4& rho, const Mat2& filter);

struct ChoiGap {
  bool defined = false;  // false for entanglement-breaking channels
  double gap = 0;        // lambda_max(choi) - fstar(choi)
  bool strict = false;   // gap > 1e-6
  double fstar_choi = 0;
};

inline constexpr double kStrictGap = 1e-6;

ChoiGap choi_state_gap(const KrausChannel& c, const FstarOptions& options = {});

}  // namespace entshare

#endif  // ENTSHARE_LOCC_H_
