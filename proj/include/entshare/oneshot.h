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

#ifndef ENTSHARE_ONESHOT_H_
#define ENTSHARE_ONESHOT_H_

// One-shot entanglement sharing through a qubit channel: the optimal singlet
// fraction over pure inputs and trace-preserving LOCC, the input that attains
// it, and the negativity relations around it.

#include <cstdint>
#include <map>
#include <string>

#include "entshare/channel.h"
#include "entshare/entmetrics.h"
#include "entshare/locc.h"

namespace entshare {

struct OptimalFraction {
  double value = 0.5;           // F(Lambda), floored at 1/2
  double raw_lambda_max = 0;    // lambda_max of the Choi state
  bool entanglement_breaking = false;
};

/// F(Lambda) = lambda_max(choi). When lambda_max <= 1/2 the channel cannot
/// beat a separable preparation and the value is reported as 1/2.
OptimalFraction optimal_singlet_fraction(const KrausChannel& c);

struct OptimalInput {
  Vec4 psi0 = Vec4::Zero();
  SchmidtData schmidt;
  bool degenerate = false;  // top eigenvalue gap of the dual Choi state < 1e-8
};

/// Top eigenvector of the dual Choi state. Under degeneracy the
/// deterministic representative chosen by hermitian_eig is returned.
OptimalInput optimal_input_state(const KrausChannel& c);

/// F1 = max over pure inputs of F(rho_{psi,Lambda}) = lambda_max(dual choi).
double preprocessed_fidelity(const KrausChannel& c);

enum class Verdict { kConsistent, kFalsified, kIndeterminate };

std::string to_string(Verdict v);

struct Classification {
  Unitality unitality;
  bool psi0_maximally_entangled = false;
  double psi0_schmidt = 0;
  Verdict verdict = Verdict::kIndeterminate;
};

inline constexpr double kMaximallyEntangledTolerance = 1e-7;

/// psi0 is maximally entangled exactly when the channel is unital; a
/// mismatch is reported as kFalsified.
Classification classify(const KrausChannel& c);

struct NegativityRelation {
  bool asserted = false;  // false for entanglement-breaking channels
  double residual = 0;    // |lambda_max(J) - (1 + N(J)) / 2|
};

NegativityRelation negativity_relation_residual(const KrausChannel& c);

struct NegativityOptions {
  int restarts = 16;
  int max_evaluations = 5000;  // shared across restarts
  std::uint64_t seed = 0x9e6a;
  int workers = 1;
};

struct ChannelNegativity {
  double value = 0;           // best N(rho_{psi,Lambda}) found
  double choi_negativity = 0; // N(J), the maximally entangled input
  double schmidt_lambda = 0.5;
  Mat2 bob_unitary = Mat2::Identity();
  Vec4 input_state = Vec4::Zero();
};

/// Maximizes the output negativity over pure inputs. An input
/// (U (x) V)(sqrt(l)|00> + sqrt(1-l)|11>) yields the Choi state filtered on
/// Alice's side by U W_l V^T with W_l = diag(sqrt(l), sqrt(1-l)); U is
/// irrelevant for negativity, so the search runs over (l, V).
ChannelNegativity channel_negativity(const KrausChannel& c, const NegativityOptions& options = {});

/// N(rho_{psi,Lambda}) for a given input.
double negativity_at_input(const KrausChannel& c, const Vec4& psi);

struct ReportOptions {
  NegativityOptions negativity;
  FstarOptions fstar;
};

struct ChannelReport {
  explicit ChannelReport(KrausChannel c) : channel(std::move(c)) {}

  KrausChannel channel;
  OptimalFraction fraction;
  OptimalInput input;
  Classification classification;
  double teleportation_fidelity = 0;
  double choi_negativity = 0;
  ChannelNegativity channel_negativity;
  double optimal_input_negativity = 0;
  double preprocessed_fidelity = 0;
  ChoiGap gap;
  // Identity checks; each is expected to be ~0.
  std::map<std::string, double> residuals;
};

ChannelReport report(const KrausChannel& c, const ReportOptions& options = {});

}  // namespace entshare

#endif  // ENTSHARE_ONESHOT_H_
