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

#include "extended.hpp"

#include <algorithm>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/float128.hpp>
#include <Eigen/Eigenvalues>

namespace sptmqc::detail {

namespace {

using Real = boost::multiprecision::float128;
using QComplex = std::complex<Real>;
using QMatrix = Eigen::Matrix<QComplex, Eigen::Dynamic, Eigen::Dynamic>;

QMatrix widen(const Matrix &m) {
    QMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(i, j) = QComplex(Real(m(i, j).real()), Real(m(i, j).imag()));
        }
    }
    return out;
}

QMatrix kron(const QMatrix &a, const QMatrix &b) {
    QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

QMatrix normalized(const QMatrix &m) {
    const Real n = m.norm();
    return n > 0 ? QMatrix(m / QComplex(n)) : m;
}

QMatrix power(const QMatrix &a, long long m) {
    QMatrix result = QMatrix::Identity(a.rows(), a.cols());
    QMatrix base = a;
    while (m > 0) {
        if (m & 1) result = normalized(result * base);
        m >>= 1;
        if (m > 0) base = normalized(base * base);
    }
    return result;
}

}  // namespace

Length buffered_correlation_length(const std::array<Matrix, 3> &junk, int axis, long long m) {
    const QMatrix p = power(widen(junk[axis]), m);
    const Eigen::Index dim = 2 * junk[0].rows();
    QMatrix channel = QMatrix::Zero(dim * dim, dim * dim);
    for (int mu = 0; mu < 3; ++mu) {
        const QMatrix a = kron(widen(linalg::pauli(mu)), p * widen(junk[mu]) * p);
        channel += kron(a.conjugate(), a);
    }
    Eigen::ComplexEigenSolver<QMatrix> solver(channel, false);
    std::vector<Real> moduli;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        moduli.push_back(abs(solver.eigenvalues()(k)));
    }
    std::sort(moduli.rbegin(), moduli.rend());
    if (moduli.size() < 2 || moduli[1] == 0) return Length::finite(0.0);
    const Real gap = 1 - moduli[1] / moduli[0];
    if (gap < Real(kExtendedDegeneracyGap)) return Length::infinite();
    // -1/ln(1 - gap), accurate for gaps far below double epsilon.
    return Length::finite(static_cast<double>(-1 / boost::multiprecision::log1p(-gap)));
}

}  // namespace sptmqc::detail
