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

#ifndef ENTSHARE_CHANNEL_H_
#define ENTSHARE_CHANNEL_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "entshare/linalg.h"

namespace entshare {

class ChoiState;

/// A qubit channel given by 1 to 4 Kraus operators.
///
/// Construction does not check trace preservation (the dual of a nonunital
/// channel is a legitimate non-trace-preserving Kraus list); use validate().
/// Lists longer than four are compressed to the canonical trace-orthogonal
/// set read off the Choi state.
class KrausChannel {
 public:
  using Params = std::map<std::string, double>;

  explicit KrausChannel(std::vector<Mat2> kraus, std::string label = {}, Params params = {});

  const std::vector<Mat2>& kraus() const { return kraus_; }
  const std::string& label() const { return label_; }
  const Params& params() const { return params_; }
  std::size_t size() const { return kraus_.size(); }

 private:
  std::vector<Mat2> kraus_;
  std::string label_;
  Params params_;
};

struct ValidationReport {
  double tp_residual = 0;        // ||sum A^dagger A - I||_F
  double cp_min_eigenvalue = 0;  // smallest eigenvalue of the Choi matrix
  bool ok = false;
};

ValidationReport validate(const KrausChannel& c, double tol = 1e-9);

/// Throws std::invalid_argument carrying the residuals when validate() fails.
void require_valid(const KrausChannel& c, double tol = 1e-9);

/// Kraus operators replaced by their adjoints. Trace preserving iff `c` is
/// unital.
KrausChannel dual(const KrausChannel& c);

struct Unitality {
  bool unital = false;
  double deviation = 0;  // ||Lambda(I) - I||_F
};

inline constexpr double kUnitalTolerance = 1e-9;

Unitality is_unital(const KrausChannel& c, double tol = kUnitalTolerance);

/// sum_i A_i rho A_i^dagger
Mat2 apply(const KrausChannel& c, const Mat2& rho);

/// (I (x) Lambda) on a two-qubit density matrix; the channel acts on the
/// second (Bob's) qubit.
Mat4 apply_to_half(const KrausChannel& c, const Mat4& state);
Mat4 apply_to_half(const KrausChannel& c, const Vec4& pure_state);

/// Affine action on Bloch vectors: r -> T r + t.
struct BlochRepresentation {
  Eigen::Matrix3d T = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();

  Eigen::Vector3d apply(const Eigen::Vector3d& r) const { return T * r + t; }
};

BlochRepresentation bloch_representation(const KrausChannel& c);

Eigen::Vector3d bloch_vector(const Mat2& rho);
Mat2 density_from_bloch(const Eigen::Vector3d& r);

/// Lambda = U1 o Lambda' o U2 where Lambda' acts on Bloch vectors as
/// r -> diag(lambdas) r + t. The rotations behind U1 and U2 are proper; a
/// reflection in T shows up as a negative lambdas[2].
struct CanonicalForm {
  Mat2 U1 = Mat2::Identity();
  Mat2 U2 = Mat2::Identity();
  Eigen::Vector3d lambdas = Eigen::Vector3d::Ones();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();

  /// Evaluates U1 Lambda'(U2 rho U2^dagger) U1^dagger.
  Mat2 apply(const Mat2& rho) const;
};

CanonicalForm canonical_form(const KrausChannel& c);

/// SO(3) rotation induced on Bloch vectors by conjugation with `u`.
Eigen::Matrix3d rotation_of(const Mat2& u);
/// An SU(2) element covering the proper rotation `r`.
Mat2 su2_covering(const Eigen::Matrix3d& r);

/// Kraus operators sqrt(p_k) G_k from the spectral decomposition of a Choi
/// state, where |psi_k> = (I (x) G_k)|Phi+>. The result is trace orthogonal:
/// Tr(A_k^dagger A_l) = 2 sqrt(p_k p_l) delta_kl. Eigenvalues below 1e-14
/// are dropped.
KrausChannel kraus_from_choi(const ChoiState& choi);

// Named constructors. Parameters outside [0, 1] throw std::invalid_argument.
KrausChannel identity_channel();
KrausChannel unitary_channel(const Mat2& u);
KrausChannel depolarizing(double p);
KrausChannel amplitude_damping(double p);
KrausChannel phase_damping(double p);
KrausChannel bit_flip(double p);

/// Random CPTP map with `kraus_rank` Kraus operators read off a random
/// isometry C^2 -> C^2 (x) C^rank (Gaussian columns, Gram-Schmidt).
KrausChannel random_channel(std::uint64_t seed, int kraus_rank);

/// Random unital channel: a Pauli mixture with random probabilities, wrapped
/// in random unitaries before and after.
KrausChannel random_pauli_channel(std::uint64_t seed);

Mat2 random_unitary(std::uint64_t seed);

}  // namespace entshare

#endif  // ENTSHARE_CHANNEL_H_
