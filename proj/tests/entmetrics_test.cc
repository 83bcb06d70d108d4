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

#include <gtest/gtest.h>

#include "entshare/channel.h"
#include "entshare/choi.h"
#include "test_util.h"

namespace entshare {
namespace {

Mat4 local_rotation(const Mat4& rho, std::uint64_t seed) {
  const Mat4 k = tensor_product(random_unitary(2 * seed), random_unitary(2 * seed + 1));
  return k * rho * k.adjoint();
}

TEST(entmetrics, singlet_fraction_examples) {
  const SingletFraction bell = singlet_fraction(projector<4>(phi_plus()));
  EXPECT_NEAR(bell.value, 1, 1e-15);
  EXPECT_NEAR(std::abs(bell.optimal_state.dot(phi_plus())), 1, 1e-14);
  EXPECT_NEAR(singlet_fraction(Mat4::Identity() / 4.0).value, 0.25, 1e-15);

  // Output of the optimal amplitude-damping input, |chi> at p = 0.5.
  const double p = 0.5;
  Vec4 chi = Vec4::Zero();
  chi(0) = 1 / std::sqrt(2 - p);
  chi(3) = std::sqrt((1 - p) / (2 - p));
  EXPECT_NEAR(singlet_fraction(apply_to_half(amplitude_damping(p), chi)).value, 0.75, 1e-14);
}

TEST(entmetrics, singlet_fraction_state_attains_value) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Mat4 rho = testing::random_density(seed);
    const SingletFraction f = singlet_fraction(rho);
    const Vec4& phi = f.optimal_state;
    EXPECT_NEAR((phi.adjoint() * rho * phi)(0, 0).real(), f.value, 1e-10);
    EXPECT_NEAR(schmidt(phi).lambda(), 0.5, 1e-9);
    EXPECT_GT(f.value, 0);
    EXPECT_LE(f.value, 1 + 1e-12);
  }
}

TEST(entmetrics, singlet_fraction_rejects_invalid_state) {
  EXPECT_THROW(singlet_fraction(Mat4::Identity()), std::invalid_argument);
}

TEST(entmetrics, singlet_fraction_is_local_unitary_invariant) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Mat4 rho = testing::random_density(seed);
    EXPECT_NEAR(singlet_fraction(local_rotation(rho, seed)).value, singlet_fraction(rho).value,
                1e-10);
    EXPECT_NEAR(negativity(local_rotation(rho, seed)), negativity(rho), 1e-10);
  }
}

TEST(entmetrics, grid_oracle_examples) {
  const GridOracleResult bell = singlet_fraction_oracle(projector<4>(phi_plus()));
  EXPECT_NEAR(bell.grid_value, 1, 1e-6);
  const GridOracleResult flat = singlet_fraction_oracle(Mat4::Identity() / 4.0);
  EXPECT_NEAR(flat.grid_value, 0.25, 1e-15);
  EXPECT_NEAR(flat.refined_value, 0.25, 1e-15);
}

TEST(entmetrics, grid_oracle_agrees_with_closed_form) {
  GridOracleOptions options;
  options.grid_step_degrees = 2.0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Mat4 rho = choi(random_channel(seed, static_cast<int>(seed % 4) + 1)).matrix();
    const double f = singlet_fraction(rho).value;
    const GridOracleResult g = singlet_fraction_oracle(rho, options);
    EXPECT_NEAR(g.grid_value, f, 1e-3);
    EXPECT_NEAR(g.refined_value, f, 1e-8);
    // The grid is a lower bound.
    EXPECT_LE(g.grid_value, f + 1e-9);
    EXPECT_LE(g.refined_value, f + 1e-9);
  }
}

TEST(entmetrics, teleportation_fidelity_examples) {
  EXPECT_DOUBLE_EQ(teleportation_fidelity(1), 1);
  EXPECT_DOUBLE_EQ(teleportation_fidelity(0.5), 2.0 / 3);
  EXPECT_DOUBLE_EQ(teleportation_fidelity(0.75), 5.0 / 6);
  EXPECT_DOUBLE_EQ(teleportation_fidelity(0.5, 3), 2.5 / 4);
  EXPECT_THROW(teleportation_fidelity(1.5), std::invalid_argument);
  EXPECT_THROW(teleportation_fidelity(-0.1), std::invalid_argument);
  EXPECT_THROW(teleportation_fidelity(0.5, 1), std::invalid_argument);
}

TEST(entmetrics, negativity_examples) {
  EXPECT_NEAR(negativity(projector<4>(phi_plus())), 1, 1e-14);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Vec2 a = testing::random_pure(seed).head<2>().normalized();
    Vec2 b = testing::random_pure(seed + 100).head<2>().normalized();
    EXPECT_NEAR(negativity(projector<4>(tensor_product(a, b))), 0, 1e-14);
  }
  const double p = 0.5;
  EXPECT_NEAR(negativity(choi(amplitude_damping(p)).matrix()),
              std::sqrt(p * p / 4 + 1 - p) - p / 2, 1e-14);
}

TEST(entmetrics, fraction_bounded_by_negativity) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Mat4 rho = testing::random_density(seed);
    if (negativity(rho) == 0) continue;
    EXPECT_LE(singlet_fraction(rho).value, 0.5 * (1 + negativity(rho)) + 1e-10);
  }
}

TEST(entmetrics, schmidt_examples) {
  const SchmidtData bell = schmidt(phi_plus());
  EXPECT_NEAR(bell.coefficients[0], 0.5, 1e-15);
  EXPECT_NEAR(bell.coefficients[1], 0.5, 1e-15);
  const SchmidtData product = schmidt(basis_state(0));
  EXPECT_NEAR(product.coefficients[0], 1, 1e-15);
  EXPECT_NEAR(product.coefficients[1], 0, 1e-15);
  const double p = 0.5;
  Vec4 chi = Vec4::Zero();
  chi(0) = 1 / std::sqrt(2 - p);
  chi(3) = std::sqrt((1 - p) / (2 - p));
  const SchmidtData s = schmidt(chi);
  EXPECT_NEAR(s.coefficients[0], 2.0 / 3, 1e-15);
  EXPECT_NEAR(s.coefficients[1], 1.0 / 3, 1e-15);
}

TEST(entmetrics, schmidt_reconstructs) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Vec4 psi = testing::random_pure(seed);
    const SchmidtData s = schmidt(psi);
    EXPECT_GE(s.coefficients[0], s.coefficients[1]);
    EXPECT_NEAR(s.coefficients[0] + s.coefficients[1], 1, 1e-12);
    EXPECT_TRUE(is_unitary<2>(s.alice, 1e-10));
    EXPECT_TRUE(is_unitary<2>(s.bob, 1e-10));
    EXPECT_LT((s.reconstruct() - psi).norm(), 1e-10);
  }
  // Product state: the second Bob vector must still complete a basis.
  const SchmidtData product = schmidt(basis_state(2));
  EXPECT_TRUE(is_unitary<2>(product.bob, 1e-12));
  EXPECT_LT((product.reconstruct() - basis_state(2)).norm(), 1e-12);
}

TEST(entmetrics, pt_spectrum_examples) {
  EXPECT_NEAR(pt_spectrum_residual(projector<4>(phi_plus())), 0, 1e-15);
  EXPECT_NEAR(pt_spectrum_residual(Mat4::Identity() / 4.0), 0, 1e-15);
  Mat4 bad = Mat4::Zero();
  bad(0, 0) = 1;
  EXPECT_THROW(pt_spectrum_residual(bad), std::invalid_argument);
}

TEST(entmetrics, pt_spectrum_on_random_choi_states) {
  for (int k = 0; k < 1000; ++k) {
    const KrausChannel c = random_channel(7000 + k, k % 4 + 1);
    EXPECT_LT(std::abs(pt_spectrum_residual(choi(c).matrix())), 1e-10);
  }
}

TEST(entmetrics, negativity_bound_diagnostic) {
  // Bell-diagonal: the negative eigenvector of the partial transpose is a
  // Bell state and the bound is saturated.
  const NegativityBoundDiagnostic bd =
      negativity_bound_diagnostic(testing::bell_diagonal(0.7, 0.1, 0.1, 0.1));
  EXPECT_TRUE(bd.saturated);
  EXPECT_TRUE(bd.eigenvector_maximally_entangled);
  EXPECT_NEAR(bd.fraction, 0.7, 1e-14);

  // Amplitude damping Choi state: F(J) = 0.72855 < (1 + N) / 2 = 0.75.
  const NegativityBoundDiagnostic ad =
      negativity_bound_diagnostic(choi(amplitude_damping(0.5)).matrix());
  EXPECT_FALSE(ad.saturated);
  EXPECT_FALSE(ad.eigenvector_maximally_entangled);
  EXPECT_NEAR(ad.bound, 0.75, 1e-14);
  EXPECT_LT(ad.fraction, ad.bound - 1e-3);
}

}  // namespace
}  // namespace entshare
