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

#include "entshare/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace entshare {
namespace {

constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 64;
constexpr double kTieTolerance = 1e-12;

template <typename Scalar>
double magnitude(const Scalar& z) {
  return std::abs(z);
}

// Unit-modulus factor z/|z|; for real scalars this is just the sign.
template <typename Scalar>
Scalar unit_phase(const Scalar& z) {
  return z / std::abs(z);
}

template <typename Scalar>
Scalar conj_of(const Scalar& z) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return z;
  } else {
    return std::conj(z);
  }
}

template <typename Scalar, int N>
double off_diagonal_norm(const Eigen::Matrix<Scalar, N, N>& a) {
  double s = 0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Cyclic Jacobi on a Hermitian (or real symmetric) matrix. On return the
// diagonal of `a` holds the eigenvalues and the columns of `v` the
// eigenvectors, in no particular order.
template <typename Scalar, int N>
void jacobi(Eigen::Matrix<Scalar, N, N>& a, Eigen::Matrix<Scalar, N, N>& v) {
  v.setIdentity();
  const double target = kOffDiagonalTarget * std::max(1.0, a.norm());
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < target) break;
    for (int p = 0; p < N - 1; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const Scalar z = a(p, q);
        const double r = magnitude(z);
        if (r == 0) continue;
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double tau = (aqq - app) / (2 * r);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = t * c;
        // J = diag(1, conj(u)) * [[c, s], [-s, c]] acting on (p, q).
        const Scalar u = conj_of(unit_phase(z));
        const Scalar jpp = c;
        const Scalar jpq = s;
        const Scalar jqp = -s * u;
        const Scalar jqq = c * u;
        for (int k = 0; k < N; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (int k = 0; k < N; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = conj_of(jpp) * apk + conj_of(jqp) * aqk;
          a(q, k) = conj_of(jpq) * apk + conj_of(jqq) * aqk;
        }
        a(p, q) = 0;
        a(q, p) = 0;
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
        for (int k = 0; k < N; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }
}

template <int N>
void fix_phase(Eigen::Matrix<cplx, N, 1>& vec) {
  double best = 0;
  for (int i = 0; i < N; ++i) best = std::max(best, std::abs(vec(i)));
  for (int i = 0; i < N; ++i) {
    if (std::abs(vec(i)) >= best - kTieTolerance) {
      const cplx z = vec(i);
      vec *= std::conj(z) / std::abs(z);
      vec(i) = std::abs(z);
      return;
    }
  }
}

double round_to(double x, double quantum) {
  const double r = std::round(x / quantum) * quantum;
  return r == 0 ? 0.0 : r;
}

template <int N>
bool lexicographically_before(const Eigen::Matrix<cplx, N, 1>& a,
                              const Eigen::Matrix<cplx, N, 1>& b) {
  constexpr double q = 1e-9;
  for (int i = 0; i < N; ++i) {
    const auto ka = std::make_tuple(round_to(a(i).real(), q), round_to(a(i).imag(), q));
    const auto kb = std::make_tuple(round_to(b(i).real(), q), round_to(b(i).imag(), q));
    if (ka != kb) return ka > kb;
  }
  return false;
}

}  // namespace

template <int N>
CMat<N> EigenDecomposition<N>::reconstruct() const {
  CMat<N> out = CMat<N>::Zero();
  for (int k = 0; k < N; ++k) out += values[k] * projector<N>(vectors.col(k));
  return out;
}

template <int N>
bool is_hermitian(const CMat<N>& m, double tol) {
  return (m - m.adjoint()).norm() <= tol;
}

template <int N>
bool is_unitary(const CMat<N>& m, double tol) {
  return (m.adjoint() * m - CMat<N>::Identity()).norm() <= tol;
}

template <int N>
bool is_psd(const CMat<N>& m, double tol) {
  if (!is_hermitian<N>(m, tol)) return false;
  return hermitian_eig<N>(m, tol).min() >= -tol;
}

template <int N>
EigenDecomposition<N> hermitian_eig(const CMat<N>& m, double tol) {
  if (!is_hermitian<N>(m, tol)) {
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within tolerance");
  }
  CMat<N> a = (m + m.adjoint()) / 2.0;
  CMat<N> v;
  jacobi(a, v);

  std::array<int, N> order{};
  std::iota(order.begin(), order.end(), 0);
  std::array<Eigen::Matrix<cplx, N, 1>, N> vecs;
  for (int k = 0; k < N; ++k) {
    vecs[k] = v.col(k);
    vecs[k].normalize();
    fix_phase<N>(vecs[k]);
  }
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a(x, x).real() > a(y, y).real();
  });
  // Within runs of (numerically) equal eigenvalues, order by the rounded
  // eigenvector so that the choice of representative is reproducible.
  for (int start = 0; start < N;) {
    int end = start + 1;
    while (end < N &&
           a(order[end - 1], order[end - 1]).real() - a(order[end], order[end]).real() <=
               kTieTolerance) {
      ++end;
    }
    std::stable_sort(order.begin() + start, order.begin() + end,
                     [&](int x, int y) { return lexicographically_before<N>(vecs[x], vecs[y]); });
    start = end;
  }

  EigenDecomposition<N> out;
  for (int k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    out.vectors.col(k) = vecs[order[k]];
  }
  return out;
}

template struct EigenDecomposition<2>;
template struct EigenDecomposition<4>;
template bool is_hermitian<2>(const Mat2&, double);
template bool is_hermitian<4>(const Mat4&, double);
template bool is_unitary<2>(const Mat2&, double);
template bool is_unitary<4>(const Mat4&, double);
template bool is_psd<2>(const Mat2&, double);
template bool is_psd<4>(const Mat4&, double);
template EigenDecomposition<2> hermitian_eig<2>(const Mat2&, double);
template EigenDecomposition<4> hermitian_eig<4>(const Mat4&, double);

namespace {

template <bool kMax>
double symmetric_extreme_eig(const RealMat4& m, Eigen::Vector4d* vec) {
  RealMat4 a = (m + m.transpose()) / 2.0;
  RealMat4 v;
  jacobi(a, v);
  int best = 0;
  for (int k = 1; k < 4; ++k) {
    if (kMax ? a(k, k) > a(best, best) : a(k, k) < a(best, best)) best = k;
  }
  if (vec != nullptr) *vec = v.col(best).normalized();
  return a(best, best);
}

}  // namespace

double symmetric_max_eig(const RealMat4& m, Eigen::Vector4d* vec) {
  return symmetric_extreme_eig<true>(m, vec);
}

double symmetric_min_eig(const RealMat4& m, Eigen::Vector4d* vec) {
  return symmetric_extreme_eig<false>(m, vec);
}

Mat4 tensor_product(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Vec4 tensor_product(const Vec2& a, const Vec2& b) {
  Vec4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out(2 * i + j) = a(i) * b(j);
  }
  return out;
}

Mat4 partial_transpose(const Mat4& m, Subsystem subsystem) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          // <ij| m |kl>
          const cplx value = m(2 * i + j, 2 * k + l);
          if (subsystem == Subsystem::kFirst) {
            out(2 * k + j, 2 * i + l) = value;
          } else {
            out(2 * i + l, 2 * k + j) = value;
          }
        }
      }
    }
  }
#ifdef ENTSHARE_FAULT_PARTIAL_TRANSPOSE
  // Injected fault: flip the sign of the |01><10| coherence. (Flipping
  // whole blocks would be a unitary conjugation and leave the spectrum
  // intact.)
  out(1, 2) = -out(1, 2);
  out(2, 1) = -out(2, 1);
#endif
  return out;
}

Mat2 partial_trace_second(const Mat4& m) {
  Mat2 out;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) out(i, k) = m(2 * i, 2 * k) + m(2 * i + 1, 2 * k + 1);
  }
  return out;
}

Mat2 partial_trace_first(const Mat4& m) {
  Mat2 out;
  for (int j = 0; j < 2; ++j) {
    for (int l = 0; l < 2; ++l) out(j, l) = m(j, l) + m(2 + j, 2 + l);
  }
  return out;
}

const Mat4& swap_operator() {
  static const Mat4 swap = [] {
    Mat4 s = Mat4::Zero();
    s(0, 0) = s(3, 3) = 1;
    s(1, 2) = s(2, 1) = 1;
    return s;
  }();
  return swap;
}

Mat4 swap_conjugate(const Mat4& m) {
  const Mat4& v = swap_operator();
  return (v.adjoint() * m * v).conjugate();
}

const Mat4& magic_basis() {
  static const Mat4 basis = [] {
    const double h = 1 / std::sqrt(2.0);
    const cplx i(0, 1);
    Mat4 b = Mat4::Zero();
    // |Phi+>
    b(0, 0) = h;
    b(3, 0) = h;
    // i|Phi->
    b(0, 1) = i * h;
    b(3, 1) = -i * h;
    // i|Psi+>
    b(1, 2) = i * h;
    b(2, 2) = i * h;
    // |Psi->
    b(1, 3) = h;
    b(2, 3) = -h;
    return b;
  }();
  return basis;
}

Mat4 to_magic_basis(const Mat4& m) {
  const Mat4& b = magic_basis();
  return b.adjoint() * m * b;
}

Mat4 from_magic_basis(const Mat4& m) {
  const Mat4& b = magic_basis();
  return b * m * b.adjoint();
}

RealMat4 magic_real_part(const Mat4& m) {
  RealMat4 r = to_magic_basis(m).real();
  return (r + r.transpose()) / 2.0;
}

Vec4 phi_plus() {
  Vec4 v = Vec4::Zero();
  v(0) = v(3) = 1 / std::sqrt(2.0);
  return v;
}

Vec4 basis_state(int index) {
  Vec4 v = Vec4::Zero();
  v(index) = 1;
  return v;
}

Mat2 pauli(int index) {
  Mat2 m;
  switch (index) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli: index must be 0..3");
  }
  return m;
}

Mat2 su2_from_euler(double a, double b, double c) {
  const cplx ea = std::polar(1.0, -a / 2);
  const cplx ec = std::polar(1.0, -c / 2);
  const double cb = std::cos(b / 2);
  const double sb = std::sin(b / 2);
  Mat2 m;
  m << ea * ec * cb, -ea * std::conj(ec) * sb, std::conj(ea) * ec * sb,
      std::conj(ea) * std::conj(ec) * cb;
  return m;
}

}  // namespace entshare
