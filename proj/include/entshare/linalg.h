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

#ifndef ENTSHARE_LINALG_H_
#define ENTSHARE_LINALG_H_

// Fixed-size complex linear algebra on one and two qubits.
//
// Basis ordering everywhere in this library is |00>, |01>, |10>, |11>, with
// the first tensor factor (Alice) as the most significant index: the
// two-qubit amplitude of |ij> lives at index 2*i + j.

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace entshare {

using cplx = std::complex<double>;

using Mat2 = Eigen::Matrix<cplx, 2, 2>;
using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Vec2 = Eigen::Matrix<cplx, 2, 1>;
using Vec4 = Eigen::Matrix<cplx, 4, 1>;
using RealMat4 = Eigen::Matrix4d;

template <int N>
using CMat = Eigen::Matrix<cplx, N, N>;

/// Eigenpairs of a Hermitian matrix, eigenvalues sorted descending.
///
/// Column k of `vectors` pairs with `values[k]`. Each eigenvector carries the
/// phase convention that its largest-magnitude component is real and
/// nonnegative (the first such component when several tie).
template <int N>
struct EigenDecomposition {
  std::array<double, N> values{};
  CMat<N> vectors = CMat<N>::Zero();

  double max() const { return values.front(); }
  double min() const { return values.back(); }
  Eigen::Matrix<cplx, N, 1> vector(int k) const { return vectors.col(k); }
  CMat<N> reconstruct() const;
};

template <int N>
bool is_hermitian(const CMat<N>& m, double tol);
template <int N>
bool is_unitary(const CMat<N>& m, double tol);
/// Hermitian and every eigenvalue >= -tol.
template <int N>
bool is_psd(const CMat<N>& m, double tol);

/// Cyclic complex Jacobi rotations until the off-diagonal Frobenius norm
/// drops below 1e-13 (relative to max(1, ||m||_F)).
///
/// Throws std::invalid_argument when `m` is not Hermitian within `tol`.
/// Identical input gives bit-identical output.
template <int N>
EigenDecomposition<N> hermitian_eig(const CMat<N>& m, double tol = 1e-9);

/// Largest eigenvalue of a real symmetric 4x4 matrix together with a unit
/// eigenvector. Used on hot paths where the full complex machinery is
/// unnecessary.
double symmetric_max_eig(const RealMat4& m, Eigen::Vector4d* vec = nullptr);
/// Smallest eigenvalue of a real symmetric 4x4 matrix.
double symmetric_min_eig(const RealMat4& m, Eigen::Vector4d* vec = nullptr);

/// Kronecker product in computational-basis order.
Mat4 tensor_product(const Mat2& a, const Mat2& b);
Vec4 tensor_product(const Vec2& a, const Vec2& b);

enum class Subsystem { kFirst, kSecond };

/// Transpose of the chosen tensor factor. An involution that preserves
/// trace and Hermiticity.
Mat4 partial_transpose(const Mat4& m, Subsystem subsystem = Subsystem::kFirst);

/// Tr_B: trace out the second qubit.
Mat2 partial_trace_second(const Mat4& m);
/// Tr_A: trace out the first qubit.
Mat2 partial_trace_first(const Mat4& m);

/// The swap V|ij> = |ji>.
const Mat4& swap_operator();

/// (V^dagger m V)^*, conjugation in the computational basis.
Mat4 swap_conjugate(const Mat4& m);

/// Unitary whose columns are |Phi+>, i|Phi->, i|Psi+>, |Psi->. Maximally
/// entangled states have real coordinates (up to a global phase) in it.
const Mat4& magic_basis();

/// M^dagger m M with M = magic_basis().
Mat4 to_magic_basis(const Mat4& m);
Mat4 from_magic_basis(const Mat4& m);

/// Real part of m expressed in the magic basis. For Hermitian m this is the
/// real symmetric matrix whose quadratic form on real unit vectors is
/// <Phi|m|Phi> over maximally entangled |Phi>.
RealMat4 magic_real_part(const Mat4& m);

Vec4 phi_plus();
Vec4 basis_state(int index);

/// Pauli matrix by index: 0 = I, 1 = X, 2 = Y, 3 = Z.
Mat2 pauli(int index);

/// Rz(a) Ry(b) Rz(c) with Rz(x) = exp(-i x Z / 2), Ry(x) = exp(-i x Y / 2).
Mat2 su2_from_euler(double a, double b, double c);

/// |v><v|.
template <int N>
CMat<N> projector(const Eigen::Matrix<cplx, N, 1>& v) {
  return v * v.adjoint();
}

}  // namespace entshare

#endif  // ENTSHARE_LINALG_H_
