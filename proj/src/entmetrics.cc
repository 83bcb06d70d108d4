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

#include "entshare/entmetrics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "entshare/optimize.h"

namespace entshare {
namespace {

// <phi| rho |phi> for phi = (W (x) I)|Phi+>, i.e. phi[2i + k] = W(i, k) / sqrt(2).
double overlap_with_rotated_phi_plus(const Mat4& rho, const Mat2& w) {
  cplx phi[4];
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) phi[2 * i + k] = w(i, k);
  }
  double total = 0;
  for (int m = 0; m < 4; ++m) {
    cplx row = 0;
    for (int n = 0; n < 4; ++n) row += rho(m, n) * phi[n];
    total += (std::conj(phi[m]) * row).real();
  }
  return total / 2;
}

Vec4 rotated_phi_plus(const Mat2& w) {
  Vec4 phi;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) phi(2 * i + k) = w(i, k) / std::sqrt(2.0);
  }
  return phi;
}

}  // namespace

void require_density_matrix(const Mat4& rho) {
  if (!is_hermitian<4>(rho, 1e-9)) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "density matrix trace is " << rho.trace().real() << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  if (hermitian_eig<4>(rho, 1e-9).min() < -1e-9) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

double max_entangled_overlap(const Mat4& m) { return symmetric_max_eig(magic_real_part(m)); }

SingletFraction singlet_fraction(const Mat4& rho) {
  require_density_matrix(rho);
  Eigen::Vector4d x;
  SingletFraction out;
  out.value = symmetric_max_eig(magic_real_part(rho), &x);
  out.optimal_state = magic_basis() * x.cast<cplx>();
  return out;
}

GridOracleResult singlet_fraction_oracle(const Mat4& rho, const GridOracleOptions& options) {
  constexpr double kPi = std::numbers::pi;
  const double step = options.grid_step_degrees * kPi / 180.0;
  const int n_outer = std::max(1, static_cast<int>(std::lround(2 * kPi / step)));
  const int n_middle = std::max(1, static_cast<int>(std::lround(kPi / step))) + 1;
  const int n_inner = n_outer;

  std::vector<double> cos_half(n_middle), sin_half(n_middle);
  for (int j = 0; j < n_middle; ++j) {
    cos_half[j] = std::cos(j * step / 2);
    sin_half[j] = std::sin(j * step / 2);
  }
  std::vector<cplx> phase(n_outer);
  for (int i = 0; i < n_outer; ++i) phase[i] = std::polar(1.0, -i * step / 2);

  struct Best {
    double value = -1;
    int i = 0, j = 0, k = 0;
  };
  std::vector<Best> per_outer(n_outer);
  parallel_for(n_outer, options.workers, [&](int i) {
    Best best;
    const cplx ea = phase[i];
    Mat2 w;
    for (int j = 0; j < n_middle; ++j) {
      for (int k = 0; k < n_inner; ++k) {
        const cplx ec = phase[k];
        w(0, 0) = ea * ec * cos_half[j];
        w(0, 1) = -ea * std::conj(ec) * sin_half[j];
        w(1, 0) = std::conj(ea) * ec * sin_half[j];
        w(1, 1) = std::conj(ea) * std::conj(ec) * cos_half[j];
        const double v = overlap_with_rotated_phi_plus(rho, w);
        if (v > best.value) best = {v, i, j, k};
      }
    }
    per_outer[i] = best;
  });
  Best best = per_outer.front();
  for (const Best& b : per_outer) {
    if (b.value > best.value) best = b;
  }

  GridOracleResult out;
  out.grid_value = best.value;
  std::vector<double> angles = {best.i * step, best.j * step, best.k * step};
  if (options.refine) {
    const Objective f = [&rho](std::span<const double> x) {
      return overlap_with_rotated_phi_plus(rho, su2_from_euler(x[0], x[1], x[2]));
    };
    SearchOptions search;
    search.initial_step = step;
    search.min_step = options.min_step;
    search.max_evaluations = 100000;
    const SearchResult r = coordinate_search(f, angles, search);
    angles = r.x;
    out.refined_value = r.value;
  } else {
    out.refined_value = out.grid_value;
  }
  out.state = rotated_phi_plus(su2_from_euler(angles[0], angles[1], angles[2]));
  return out;
}

double teleportation_fidelity(double fraction, int d) {
  // Eigenvalues of exact unit-norm states may land a few ulps past 1.
  constexpr double kSlack = 1e-12;
  if (!(fraction >= -kSlack && fraction <= 1.0 + kSlack)) {
    throw std::invalid_argument("teleportation_fidelity: singlet fraction outside [0, 1]");
  }
  if (d < 2) throw std::invalid_argument("teleportation_fidelity: dimension must be >= 2");
  fraction = std::clamp(fraction, 0.0, 1.0);
  return (d * fraction + 1) / (d + 1);
}

double negativity(const Mat4& rho) {
  const double lmin = hermitian_eig<4>(partial_transpose(rho), 1e-6).min();
  return std::max(0.0, -2 * lmin);
}

Vec4 SchmidtData::reconstruct() const {
  Vec4 out = Vec4::Zero();
  for (int k = 0; k < 2; ++k) {
    out += std::sqrt(coefficients[k]) *
           tensor_product(Vec2(alice.col(k)), Vec2(bob.col(k)));
  }
  return out;
}

SchmidtData schmidt(const Vec4& psi) {
  Mat2 c;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c(i, j) = psi(2 * i + j);
  }
  const EigenDecomposition<2> eig = hermitian_eig<2>(c * c.adjoint(), 1e-9);
  SchmidtData out;
  out.alice = eig.vectors;
  for (int k = 0; k < 2; ++k) out.coefficients[k] = std::max(0.0, eig.values[k]);
  const double total = out.coefficients[0] + out.coefficients[1];
  if (total > 0) {
    out.coefficients[0] /= total;
    out.coefficients[1] /= total;
  }
  const double norm = std::sqrt(total);
  for (int k = 0; k < 2; ++k) {
    const double s = std::sqrt(std::max(0.0, eig.values[k]));
    if (s > 1e-12 * std::max(1.0, norm)) {
      out.bob.col(k) = c.transpose() * eig.vectors.col(k).conjugate() / s;
    } else if (k == 1) {
      out.bob(0, 1) = -std::conj(out.bob(1, 0));
      out.bob(1, 1) = std::conj(out.bob(0, 0));
    }
  }
  return out;
}

double pt_spectrum_residual(const Mat4& sigma) {
  if ((partial_trace_second(sigma) - Mat2::Identity() / 2.0).norm() > 1e-8) {
    throw std::invalid_argument("pt_spectrum_residual: Tr_B(sigma) differs from I/2");
  }
  const double lmin_pt = hermitian_eig<4>(partial_transpose(sigma), 1e-6).min();
  const double lmax = hermitian_eig<4>(sigma, 1e-6).max();
  return lmin_pt + lmax - 0.5;
}

NegativityBoundDiagnostic negativity_bound_diagnostic(const Mat4& sigma, double tol) {
  NegativityBoundDiagnostic out;
  out.fraction = max_entangled_overlap(sigma);
  out.bound = 0.5 * (1 + negativity(sigma));
  const EigenDecomposition<4> pt = hermitian_eig<4>(partial_transpose(sigma), 1e-6);
  out.negative_eigenvector_schmidt = schmidt(pt.vector(3)).lambda();
  out.saturated = std::abs(out.fraction - out.bound) <= tol;
  out.eigenvector_maximally_entangled = std::abs(out.negative_eigenvector_schmidt - 0.5) < 1e-7;
  return out;
}

}  // namespace entshare
