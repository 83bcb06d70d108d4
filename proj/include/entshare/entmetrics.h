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

#ifndef ENTSHARE_ENTMETRICS_H_
#define ENTSHARE_ENTMETRICS_H_

#include "entshare/linalg.h"

namespace entshare {

/// Throws std::invalid_argument unless `rho` is Hermitian, has unit trace
/// (1e-10) and no eigenvalue below -1e-9.
void require_density_matrix(const Mat4& rho);

struct SingletFraction {
  double value = 0;
  Vec4 optimal_state = Vec4::Zero();  // maximally entangled
};

/// max over maximally entangled |Phi> of <Phi|rho|Phi>. In the magic basis
/// the maximally entangled states are the real unit vectors, so this is the
/// top eigenpair of the real part of rho there.
SingletFraction singlet_fraction(const Mat4& rho);

/// The same maximum for any Hermitian `m`, without validation. For an
/// unnormalized state p*rho this returns p*F(rho).
double max_entangled_overlap(const Mat4& m);

struct GridOracleOptions {
  double grid_step_degrees = 2.0;
  bool refine = true;
  double min_step = 1e-6;  // radians, end of the step-halving refinement
  int workers = 1;
};

struct GridOracleResult {
  double grid_value = 0;     // best grid point
  double refined_value = 0;  // after coordinate refinement (== grid_value if disabled)
  Vec4 state = Vec4::Zero();
};

/// Brute force over maximally entangled states (W (x) I)|Phi+> with W an
/// Euler-angle grid over SU(2); U (x) V|Phi+> = (U V^T (x) I)|Phi+> so one
/// local unitary suffices. A lower bound on singlet_fraction(rho).
GridOracleResult singlet_fraction_oracle(const Mat4& rho, const GridOracleOptions& options = {});

/// (d F + 1) / (d + 1). Throws for F outside [0, 1] or d < 2.
double teleportation_fidelity(double fraction, int d = 2);

/// max(0, -2 lambda_min(rho^Gamma)).
double negativity(const Mat4& rho);

struct SchmidtData {
  // Squared Schmidt coefficients, descending, summing to 1.
  std::array<double, 2> coefficients{};
  // Columns are |e_k> and |f_k>: psi = sum_k sqrt(c_k) |e_k>|f_k>.
  Mat2 alice = Mat2::Identity();
  Mat2 bob = Mat2::Identity();

  double lambda() const { return coefficients[0]; }
  Vec4 reconstruct() const;
};

SchmidtData schmidt(const Vec4& psi);

/// lambda_min(sigma^Gamma) + lambda_max(sigma) - 1/2. Requires
/// Tr_B(sigma) = I/2 within 1e-8, throws std::invalid_argument otherwise.
double pt_spectrum_residual(const Mat4& sigma);

/// Whether F(sigma) saturates (1 + N(sigma)) / 2 and whether the eigenvector
/// of the most negative eigenvalue of sigma^Gamma is maximally entangled.
/// The two are expected to coincide for entangled two-qubit states.
struct NegativityBoundDiagnostic {
  double fraction = 0;
  double bound = 0;
  double negative_eigenvector_schmidt = 0;
  bool saturated = false;
  bool eigenvector_maximally_entangled = false;
};

NegativityBoundDiagnostic negativity_bound_diagnostic(const Mat4& sigma, double tol = 1e-9);

}  // namespace entshare

#endif  // ENTSHARE_ENTMETRICS_H_
