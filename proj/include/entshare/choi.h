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

#ifndef ENTSHARE_CHOI_H_
#define ENTSHARE_CHOI_H_

#include <string>

#include "entshare/channel.h"
#include "entshare/linalg.h"

namespace entshare {

/// (I (x) Lambda)|Phi+><Phi+| or its dual counterpart, with the spectral
/// decomposition computed once at construction.
class ChoiState {
 public:
  enum class Kind { kDirect, kDual };

  /// Checks PSD (-1e-9), unit trace (1e-12 scaled) and, for direct Choi
  /// states, Tr_B = I/2 within 1e-8. Throws std::invalid_argument otherwise.
  ChoiState(const Mat4& matrix, Kind kind = Kind::kDirect, std::string source = {});

  const Mat4& matrix() const { return matrix_; }
  const EigenDecomposition<4>& eig() const { return eig_; }
  Kind kind() const { return kind_; }
  const std::string& source() const { return source_; }

  double lambda_max() const { return eig_.max(); }

 private:
  Mat4 matrix_;
  EigenDecomposition<4> eig_;
  Kind kind_;
  std::string source_;
};

/// sum_i (I (x) A_i)|Phi+><Phi+|(I (x) A_i^dagger) for an arbitrary Kraus
/// list, without any validity checks.
Mat4 choi_matrix(const std::vector<Mat2>& kraus);

ChoiState choi(const KrausChannel& c);

/// Built from the adjoint Kraus list, sum_i (I (x) A_i^dagger)|Phi+><Phi+|(I (x) A_i).
/// Equal to swap_conjugate(choi(c).matrix()).
ChoiState dual_choi(const KrausChannel& c);

struct CorrespondenceCheck {
  double max_residual = 0;
  // True when some eigenvalue gap fell below 1e-8 and the affected
  // eigenvectors were compared as subspace projectors.
  bool subspace_mode = false;
};

inline constexpr double kDegeneracyGap = 1e-8;

/// Compares the eigenvectors of dual_choi(c) with (V^dagger|psi'_k>)^* built
/// from the eigenvectors of choi(c). Vectors are phase-aligned before
/// comparison; degenerate groups are compared through their projectors.
CorrespondenceCheck eigenvector_correspondence_check(const KrausChannel& c);

}  // namespace entshare

#endif  // ENTSHARE_CHOI_H_
