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

// Reference computations written without the library's helpers, used as
// independent oracles in the tests.

#ifndef SPTMQC_TESTS_ORACLES_HPP
#define SPTMQC_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat sigma(int mu) {
    Mat s(2, 2);
    switch (mu) {
        case 0: s << 0, 1, 1, 0; break;
        case 1: s << 0, cd(0, -1), cd(0, 1), 0; break;
        case 2: s << 1, 0, 0, -1; break;
        default: s = Mat::Identity(2, 2);
    }
    return s;
}

/// Entry-by-entry Kronecker product.
inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Transfer matrix built from its index definition:
/// E[(a,b),(c,d)] = sum_i A_i(a,c) conj(A_i(b,d)) acting on row-major |a><b|.
/// Its spectrum equals that of any vectorization convention.
inline Mat transfer_by_indices(const std::vector<Mat> &a) {
    const int d = static_cast<int>(a.front().rows());
    Mat e = Mat::Zero(d * d, d * d);
    for (const auto &m : a)
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q)
                for (int r = 0; r < d; ++r)
                    for (int s = 0; s < d; ++s) e(p * d + q, r * d + s) += m(p, r) * std::conj(m(q, s));
    return e;
}

/// Eigenvalue moduli in descending order.
inline std::vector<double> moduli(const Mat &m) {
    Eigen::ComplexEigenSolver<Mat> es(m, false);
    std::vector<double> out;
    for (int k = 0; k < es.eigenvalues().size(); ++k) out.push_back(std::abs(es.eigenvalues()(k)));
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Toy junk operators written out from the defining formula.
inline std::array<Mat, 3> toy_junk(double theta, double phi) {
    const double c = std::cos(theta / 2);
    const cd s = std::sin(theta / 2) * std::exp(cd(0, phi));
    const double r = std::sqrt(3.0) / 2;
    const std::array<Mat, 3> n = {Mat(-0.5 * sigma(0) + r * sigma(1)), Mat(-0.5 * sigma(0) - r * sigma(1)), sigma(0)};
    std::array<Mat, 3> out;
    for (int mu = 0; mu < 3; ++mu) out[mu] = (c * Mat::Identity(2, 2) + s * n[mu]) / std::sqrt(3.0);
    return out;
}

/// |lambda_+|^2 and |lambda_-|^2 of a_z: a_z = (c + s sigma_x)/sqrt 3 has
/// eigenvalues (c +- s)/sqrt 3, so |.|^2 = (1 +- sin(theta) cos(phi)) / 3.
inline std::array<double, 2> toy_az_moduli_squared(double theta, double phi) {
    const double x = std::sin(theta) * std::cos(phi);
    return {(1 + std::abs(x)) / 3, (1 - std::abs(x)) / 3};
}

/// Probability that a window of sites reads out `labels` on the canonical
/// chain with fixed points (left, right): explicit product of matrices.
inline double window_probability(const std::vector<Mat> &a, const Mat &left, const Mat &right,
                                 const std::vector<int> &labels) {
    Mat ket = Mat::Identity(a[0].rows(), a[0].cols());
    for (int l : labels) ket = ket * a[l];
    return ((left * ket * right * ket.adjoint()).trace() / (left * right).trace()).real();
}

// <psi| u^{(x)n} |psi> on n sites of the infinite chain, summed over all
// bra and ket outcome strings without any channel algebra.
inline cd string_by_enumeration(const std::vector<Mat> &a, const Mat &left, const Mat &u, int n) {
    const int d = static_cast<int>(a.size());
    int count = 1;
    for (int k = 0; k < n; ++k) count *= d;
    std::vector<Mat> products(count);
    std::vector<std::vector<int>> strings(count);
    for (int s = 0; s < count; ++s) {
        Mat p = Mat::Identity(a[0].rows(), a[0].cols());
        int code = s;
        for (int k = 0; k < n; ++k) {
            strings[s].push_back(code % d);
            p = p * a[code % d];
            code /= d;
        }
        products[s] = p;
    }
    cd total = 0.0;
    for (int ket = 0; ket < count; ++ket) {
        const Mat weighted = left * products[ket];
        for (int bra = 0; bra < count; ++bra) {
            cd w = 1.0;
            for (int k = 0; k < n && w != 0.0; ++k) w *= u(strings[bra][k], strings[ket][k]);
            if (w == 0.0) continue;
            total += w * (weighted * products[bra].adjoint()).trace();
        }
    }
    return total / left.trace();
}

}  // namespace oracle

#endif
