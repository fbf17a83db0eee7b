// Copyright 2026 The sptmqc Authors
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

#ifndef SPTMQC_LINALG_HPP
#define SPTMQC_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace sptmqc {

using complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Relative gap below which two eigenvalue moduli count as tied.
inline constexpr double kDegeneracyGap = 1e-8;

namespace linalg {

Matrix kron(const Matrix &a, const Matrix &b);

/// Column-major vectorization; vec(A X B) = (B^T kron A) vec(X).
Vector vec(const Matrix &x);
Matrix unvec(const Vector &v, Eigen::Index dim);

/// Pauli matrices indexed 0 = x, 1 = y, 2 = z.
Matrix pauli(int index);

double max_abs(const Matrix &m);
Matrix hermitian_part(const Matrix &m);

/// Eigenvalues ordered by modulus desc, then real part desc, then imag part desc.
std::vector<complex> sorted_eigenvalues(const Matrix &m);
void sort_spectrum(std::vector<complex> &values);

/// Riesz projector onto the eigenvalues of `m` enclosed by the circle
/// |z - center| = radius, by trapezoid quadrature of the resolvent.
Matrix spectral_projector(const Matrix &m, complex center, double radius, int nodes = 128);

/// Riesz projector onto the eigenvalue cluster containing `target`: all
/// eigenvalues within `cluster_tol * max(1, |target|)` of it.
Matrix cluster_projector(const Matrix &m, complex target, double cluster_tol = kDegeneracyGap);

/// Nearest unitary in Frobenius norm (polar factor).
Matrix polar_unitary(const Matrix &m);

/// Principal square root of a Hermitian positive semidefinite matrix.
Matrix sqrt_psd(const Matrix &m);

/// Orthogonal projector onto the span of eigenvectors of the Hermitian
/// matrix `m` with eigenvalue above `rel_tol * max eigenvalue`.
Matrix support_projector(const Matrix &m, double rel_tol = 1e-10);

/// tr_1 and tr_2 for an operator on C^outer kron C^inner.
Matrix trace_outer(const Matrix &m, Eigen::Index outer);
Matrix trace_inner(const Matrix &m, Eigen::Index outer);

/// Nearest Kronecker product outer kron inner (Van Loan rearrangement).
struct KronFactors {
    Matrix outer;
    Matrix inner;
    double residual;  ///< max-abs deviation of outer kron inner from the input
};
KronFactors kron_factorize(const Matrix &m, Eigen::Index outer_dim);

/// a^power divided by a positive scale; log_scale receives ln of that
/// scale so that a^power = exp(log_scale) * result. power = 0 returns I.
Matrix scaled_power(const Matrix &a, long long power, double *log_scale = nullptr);

/// Multiply by the unit complex that makes the first entry (row-major) with
/// modulus above tol * max-abs real and positive.
Matrix fix_phase_first_entry(const Matrix &m, double tol = 1e-9);

}  // namespace linalg
}  // namespace sptmqc

#endif
