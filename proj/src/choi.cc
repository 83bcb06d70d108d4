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

#include "entshare/choi.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entshare {

Mat4 choi_matrix(const std::vector<Mat2>& kraus) {
  const Vec4 phi = phi_plus();
  Mat4 out = Mat4::Zero();
  for (const Mat2& a : kraus) {
    const Vec4 v = tensor_product(Mat2::Identity().eval(), a) * phi;
    out += projector<4>(v);
  }
  return out;
}

ChoiState::ChoiState(const Mat4& matrix, Kind kind, std::string source)
    : matrix_(matrix), eig_(hermitian_eig<4>(matrix, 1e-9)), kind_(kind), source_(std::move(source)) {
  if (eig_.min() < -1e-9) {
    throw std::invalid_argument("ChoiState: matrix is not positive semidefinite (min eigenvalue " +
                                std::to_string(eig_.min()) + ")");
  }
  if (std::abs(matrix_.trace() - 1.0) > 1e-10) {
    throw std::invalid_argument("ChoiState: trace differs from 1");
  }
  if (kind_ == Kind::kDirect &&
      (partial_trace_second(matrix_) - Mat2::Identity() / 2.0).norm() > 1e-8) {
    throw std::invalid_argument("ChoiState: Alice marginal differs from I/2 (not trace preserving)");
  }
}

ChoiState choi(const KrausChannel& c) {
  return ChoiState(choi_matrix(c.kraus()), ChoiState::Kind::kDirect, c.label());
}

ChoiState dual_choi(const KrausChannel& c) {
  return ChoiState(choi_matrix(dual(c).kraus()), ChoiState::Kind::kDual, c.label());
}

CorrespondenceCheck eigenvector_correspondence_check(const KrausChannel& c) {
  const ChoiState direct = choi(c);
  const ChoiState dual_state = dual_choi(c);
  const Mat4& swap = swap_operator();

  Mat4 mapped;
  for (int k = 0; k < 4; ++k) {
    mapped.col(k) = (swap.adjoint() * direct.eig().vectors.col(k)).conjugate();
  }

  CorrespondenceCheck out;
  const auto& values = direct.eig().values;
  for (int start = 0; start < 4;) {
    int end = start + 1;
    while (end < 4 && values[end - 1] - values[end] < kDegeneracyGap) ++end;
    if (end - start == 1) {
      const Vec4 expected = dual_state.eig().vectors.col(start);
      Vec4 candidate = mapped.col(start);
      const cplx overlap = candidate.dot(expected);  // <candidate|expected>
      if (std::abs(overlap) > 0) candidate *= overlap / std::abs(overlap);
      out.max_residual = std::max(out.max_residual, (candidate - expected).norm());
    } else {
      out.subspace_mode = true;
      Mat4 p_mapped = Mat4::Zero();
      Mat4 p_dual = Mat4::Zero();
      for (int k = start; k < end; ++k) {
        p_mapped += projector<4>(Vec4(mapped.col(k)));
        p_dual += projector<4>(Vec4(dual_state.eig().vectors.col(k)));
      }
      out.max_residual = std::max(out.max_residual, (p_mapped - p_dual).norm());
    }
    start = end;
  }
  return out;
}

}  // namespace entshare
