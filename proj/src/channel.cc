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

#include "entshare/channel.h"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "entshare/choi.h"

namespace entshare {
namespace {

constexpr double kDroppedEigenvalue = 1e-14;

std::vector<Mat2> kraus_from_choi_matrix(const Mat4& matrix) {
  const EigenDecomposition<4> eig = hermitian_eig<4>(matrix, 1e-9);
  std::vector<Mat2> out;
  for (int k = 0; k < 4; ++k) {
    const double p = eig.values[k];
    if (p <= kDroppedEigenvalue) continue;
    // |psi_k>[2i + j] = G_k(j, i) / sqrt(2): column i of G_k is read off
    // the i-th half of the eigenvector.
    Mat2 g;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) g(j, i) = std::sqrt(2.0) * eig.vectors(2 * i + j, k);
    }
    out.push_back(std::sqrt(p) * g);
  }
  return out;
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << what << ": parameter p=" << p << " outside [0, 1]";
    throw std::invalid_argument(msg.str());
  }
}

Mat2 gaussian_matrix(std::mt19937_64& rng, int rows) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat2 m;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = cplx(re, im);
    }
  }
  return m;
}

Mat2 haar_unitary(std::mt19937_64& rng) {
  Mat2 g = gaussian_matrix(rng, 2);
  Vec2 a = g.col(0);
  a.normalize();
  Vec2 b = g.col(1) - a * a.dot(g.col(1));
  b.normalize();
  Mat2 u;
  u.col(0) = a;
  u.col(1) = b;
  return u;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Mat2> kraus, std::string label, Params params)
    : kraus_(std::move(kraus)), label_(std::move(label)), params_(std::move(params)) {
  if (kraus_.empty()) throw std::invalid_argument("KrausChannel: at least one Kraus operator required");
  if (kraus_.size() > 4) kraus_ = kraus_from_choi_matrix(choi_matrix(kraus_));
}

ValidationReport validate(const KrausChannel& c, double tol) {
  ValidationReport report;
  Mat2 sum = Mat2::Zero();
  for (const Mat2& a : c.kraus()) sum += a.adjoint() * a;
  report.tp_residual = (sum - Mat2::Identity()).norm();
  report.cp_min_eigenvalue = hermitian_eig<4>(choi_matrix(c.kraus()), 1e-6).min();
  report.ok = report.tp_residual <= tol && report.cp_min_eigenvalue >= -tol;
  return report;
}

void require_valid(const KrausChannel& c, double tol) {
  const ValidationReport r = validate(c, tol);
  if (!r.ok) {
    std::ostringstream msg;
    msg << "channel is not CPTP: tp_residual=" << r.tp_residual
        << " cp_min_eigenvalue=" << r.cp_min_eigenvalue;
    throw std::invalid_argument(msg.str());
  }
}

KrausChannel dual(const KrausChannel& c) {
  std::vector<Mat2> daggers;
  daggers.reserve(c.size());
  for (const Mat2& a : c.kraus()) daggers.push_back(a.adjoint());
  return KrausChannel(std::move(daggers), c.label().empty() ? "" : "dual(" + c.label() + ")");
}

Unitality is_unital(const KrausChannel& c, double tol) {
  Unitality out;
  out.deviation = (entshare::apply(c, Mat2::Identity()) - Mat2::Identity()).norm();
  out.unital = out.deviation < tol;
  return out;
}

Mat2 apply(const KrausChannel& c, const Mat2& rho) {
  Mat2 out = Mat2::Zero();
  for (const Mat2& a : c.kraus()) out += a * rho * a.adjoint();
  return out;
}

Mat4 apply_to_half(const KrausChannel& c, const Mat4& state) {
  Mat4 out = Mat4::Zero();
  const Mat2 id = Mat2::Identity();
  for (const Mat2& a : c.kraus()) {
    const Mat4 k = tensor_product(id, a);
    out += k * state * k.adjoint();
  }
  return out;
}

Mat4 apply_to_half(const KrausChannel& c, const Vec4& pure_state) {
  return apply_to_half(c, projector<4>(pure_state));
}

Eigen::Vector3d bloch_vector(const Mat2& rho) {
  Eigen::Vector3d r;
  for (int i = 0; i < 3; ++i) r(i) = (pauli(i + 1) * rho).trace().real();
  return r;
}

Mat2 density_from_bloch(const Eigen::Vector3d& r) {
  Mat2 rho = Mat2::Identity();
  for (int i = 0; i < 3; ++i) rho += r(i) * pauli(i + 1);
  return rho / 2.0;
}

BlochRepresentation bloch_representation(const KrausChannel& c) {
  BlochRepresentation b;
  for (int j = 0; j < 3; ++j) {
    const Mat2 image = entshare::apply(c, pauli(j + 1));
    for (int i = 0; i < 3; ++i) b.T(i, j) = 0.5 * (pauli(i + 1) * image).trace().real();
  }
  const Mat2 image_of_identity = entshare::apply(c, Mat2::Identity());
  for (int i = 0; i < 3; ++i) b.t(i) = 0.5 * (pauli(i + 1) * image_of_identity).trace().real();
  return b;
}

Eigen::Matrix3d rotation_of(const Mat2& u) {
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = 0.5 * (pauli(i + 1) * u * pauli(j + 1) * u.adjoint()).trace().real();
    }
  }
  return r;
}

Mat2 su2_covering(const Eigen::Matrix3d& r) {
  const Eigen::Quaterniond q(r);
  const cplx i(0, 1);
  return q.w() * pauli(0) - i * (q.x() * pauli(1) + q.y() * pauli(2) + q.z() * pauli(3));
}

Mat2 CanonicalForm::apply(const Mat2& rho) const {
  const Mat2 rotated = U2 * rho * U2.adjoint();
  const double trace = rotated.trace().real();
  const Eigen::Vector3d r = bloch_vector(rotated);
  const Eigen::Vector3d image = lambdas.asDiagonal() * r + trace * t;
  Mat2 out = trace * Mat2::Identity();
  for (int k = 0; k < 3; ++k) out += image(k) * pauli(k + 1);
  out /= 2.0;
  return U1 * out * U1.adjoint();
}

CanonicalForm canonical_form(const KrausChannel& c) {
  const BlochRepresentation b = bloch_representation(c);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(b.T, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d left = svd.matrixU();
  Eigen::Matrix3d right = svd.matrixV();
  Eigen::Vector3d d = svd.singularValues();
  if (left.determinant() < 0) {
    left.col(2) *= -1;
    d(2) *= -1;
  }
  if (right.determinant() < 0) {
    right.col(2) *= -1;
    d(2) *= -1;
  }
  CanonicalForm out;
  out.lambdas = d;
  out.t = left.transpose() * b.t;
  out.U1 = su2_covering(left);
  out.U2 = su2_covering(right.transpose());
  return out;
}

KrausChannel kraus_from_choi(const ChoiState& choi) {
  if (choi.kind() != ChoiState::Kind::kDirect) {
    throw std::invalid_argument("kraus_from_choi: expects a direct Choi state with Tr_B = I/2");
  }
  return KrausChannel(kraus_from_choi_matrix(choi.matrix()), choi.source());
}

KrausChannel identity_channel() { return KrausChannel({Mat2::Identity()}, "identity"); }

KrausChannel unitary_channel(const Mat2& u) {
  if (!is_unitary<2>(u, 1e-9)) throw std::invalid_argument("unitary_channel: matrix is not unitary");
  return KrausChannel({u}, "unitary");
}

KrausChannel depolarizing(double p) {
  require_probability(p, "depolarizing");
  std::vector<Mat2> k;
  k.push_back(std::sqrt(1 - 3 * p / 4) * pauli(0));
  for (int i = 1; i < 4; ++i) k.push_back(std::sqrt(p / 4) * pauli(i));
  return KrausChannel(std::move(k), "depolarizing", {{"p", p}});
}

KrausChannel amplitude_damping(double p) {
  require_probability(p, "amplitude_damping");
  Mat2 k0;
  k0 << 1, 0, 0, std::sqrt(1 - p);
  Mat2 k1;
  k1 << 0, std::sqrt(p), 0, 0;
  return KrausChannel({k0, k1}, "amplitude_damping", {{"p", p}});
}

KrausChannel phase_damping(double p) {
  require_probability(p, "phase_damping");
  Mat2 k0;
  k0 << 1, 0, 0, std::sqrt(1 - p);
  Mat2 k1;
  k1 << 0, 0, 0, std::sqrt(p);
  return KrausChannel({k0, k1}, "phase_damping", {{"p", p}});
}

KrausChannel bit_flip(double p) {
  require_probability(p, "bit_flip");
  return KrausChannel({std::sqrt(1 - p) * pauli(0), std::sqrt(p) * pauli(1)}, "bit_flip", {{"p", p}});
}

KrausChannel random_channel(std::uint64_t seed, int kraus_rank) {
  if (kraus_rank < 1 || kraus_rank > 4) {
    throw std::invalid_argument("random_channel: kraus_rank must be in 1..4");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int rows = 2 * kraus_rank;
  Eigen::MatrixXcd w(rows, 2);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      w(i, j) = cplx(re, im);
    }
  }
  // Gram-Schmidt on the two columns: an isometry C^2 -> C^2 (x) C^rank.
  w.col(0).normalize();
  w.col(1) -= w.col(0) * w.col(0).dot(w.col(1));
  w.col(1).normalize();

  std::vector<Mat2> kraus(kraus_rank);
  for (int k = 0; k < kraus_rank; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) kraus[k](i, j) = w(i * kraus_rank + k, j);
    }
  }
  return KrausChannel(std::move(kraus), "random_channel",
                      {{"seed", static_cast<double>(seed)}, {"rank", static_cast<double>(kraus_rank)}});
}

KrausChannel random_pauli_channel(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> w{};
  double total = 0;
  for (double& x : w) total += (x = expo(rng));
  const Mat2 before = haar_unitary(rng);
  const Mat2 after = haar_unitary(rng);
  std::vector<Mat2> kraus;
  for (int i = 0; i < 4; ++i) kraus.push_back(std::sqrt(w[i] / total) * after * pauli(i) * before);
  return KrausChannel(std::move(kraus), "random_pauli_channel", {{"seed", static_cast<double>(seed)}});
}

Mat2 random_unitary(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_unitary(rng);
}

}  // namespace entshare
