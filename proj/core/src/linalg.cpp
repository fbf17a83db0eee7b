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

#include "sptmqc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace sptmqc::linalg {

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector vec(const Matrix &x) {
    return Eigen::Map<const Vector>(x.data(), x.size());
}

Matrix unvec(const Vector &v, Eigen::Index dim) {
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

Matrix pauli(int index) {
    Matrix p = Matrix::Zero(2, 2);
    switch (index) {
        case 0:
            p(0, 1) = 1;
            p(1, 0) = 1;
            break;
        case 1:
            p(0, 1) = complex(0, -1);
            p(1, 0) = complex(0, 1);
            break;
        case 2:
            p(0, 0) = 1;
            p(1, 1) = -1;
            break;
        default:
            p = Matrix::Identity(2, 2);
    }
    return p;
}

double max_abs(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Matrix hermitian_part(const Matrix &m) {
    return 0.5 * (m + m.adjoint());
}

void sort_spectrum(std::vector<complex> &values) {
    std::stable_sort(values.begin(), values.end(), [](complex a, complex b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
}

std::vector<complex> sorted_eigenvalues(const Matrix &m) {
    Eigen::ComplexEigenSolver<Matrix> solver(m, false);
    std::vector<complex> values(solver.eigenvalues().data(),
                                solver.eigenvalues().data() + solver.eigenvalues().size());
    sort_spectrum(values);
    return values;
}

Matrix spectral_projector(const Matrix &m, complex center, double radius, int nodes) {
    const Eigen::Index n = m.rows();
    Matrix acc = Matrix::Zero(n, n);
    const Matrix id = Matrix::Identity(n, n);
    for (int k = 0; k < nodes; ++k) {
        double angle = 2.0 * std::numbers::pi * (k + 0.5) / nodes;
        complex offset = radius * std::polar(1.0, angle);
        Matrix shifted = (center + offset) * id - m;
        acc += offset * shifted.partialPivLu().inverse();
    }
    return acc / static_cast<double>(nodes);
}

Matrix cluster_projector(const Matrix &m, complex target, double cluster_tol) {
    auto values = sorted_eigenvalues(m);
    const double tol = cluster_tol * std::max(1.0, std::abs(target));
    double spread = 0.0;
    double outside = std::numeric_limits<double>::infinity();
    for (complex v : values) {
        double d = std::abs(v - target);
        if (d <= tol) {
            spread = std::max(spread, d);
        } else {
            outside = std::min(outside, d);
        }
    }
    if (!std::isfinite(outside)) {
        return Matrix::Identity(m.rows(), m.cols());
    }
    double radius = 0.5 * outside;
    if (radius <= 2.0 * spread) {
        radius = 0.5 * (spread + outside);
    }
    radius = std::max(radius, 1e-300);
    return spectral_projector(m, target, radius);
}

Matrix polar_unitary(const Matrix &m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

Matrix sqrt_psd(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(m));
    Eigen::VectorXd vals = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * vals.cast<complex>().asDiagonal() * solver.eigenvectors().adjoint();
}

Matrix support_projector(const Matrix &m, double rel_tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(m));
    const auto &vals = solver.eigenvalues();
    const double top = vals.cwiseAbs().maxCoeff();
    Matrix p = Matrix::Zero(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) > rel_tol * top) {
            p += solver.eigenvectors().col(i) * solver.eigenvectors().col(i).adjoint();
        }
    }
    return p;
}

Matrix trace_outer(const Matrix &m, Eigen::Index outer) {
    const Eigen::Index inner = m.rows() / outer;
    Matrix out = Matrix::Zero(inner, inner);
    for (Eigen::Index i = 0; i < outer; ++i) {
        out += m.block(i * inner, i * inner, inner, inner);
    }
    return out;
}

Matrix trace_inner(const Matrix &m, Eigen::Index outer) {
    const Eigen::Index inner = m.rows() / outer;
    Matrix out(outer, outer);
    for (Eigen::Index i = 0; i < outer; ++i) {
        for (Eigen::Index j = 0; j < outer; ++j) {
            out(i, j) = m.block(i * inner, j * inner, inner, inner).trace();
        }
    }
    return out;
}

KronFactors kron_factorize(const Matrix &m, Eigen::Index outer_dim) {
    const Eigen::Index inner = m.rows() / outer_dim;
    Matrix rearranged(outer_dim * outer_dim, inner * inner);
    for (Eigen::Index i = 0; i < outer_dim; ++i) {
        for (Eigen::Index j = 0; j < outer_dim; ++j) {
            Matrix block = m.block(i * inner, j * inner, inner, inner);
            for (Eigen::Index k = 0; k < inner; ++k) {
                for (Eigen::Index l = 0; l < inner; ++l) {
                    rearranged(i * outer_dim + j, k * inner + l) = block(k, l);
                }
            }
        }
    }
    Eigen::JacobiSVD<Matrix> svd(rearranged, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double s = std::sqrt(svd.singularValues()(0));
    KronFactors out{Matrix(outer_dim, outer_dim), Matrix(inner, inner), 0.0};
    for (Eigen::Index i = 0; i < outer_dim; ++i) {
        for (Eigen::Index j = 0; j < outer_dim; ++j) {
            out.outer(i, j) = s * svd.matrixU()(i * outer_dim + j, 0);
        }
    }
    for (Eigen::Index k = 0; k < inner; ++k) {
        for (Eigen::Index l = 0; l < inner; ++l) {
            out.inner(k, l) = s * std::conj(svd.matrixV()(k * inner + l, 0));
        }
    }
    out.residual = max_abs(m - kron(out.outer, out.inner));
    return out;
}

Matrix scaled_power(const Matrix &a, long long power, double *log_scale) {
    Matrix result = Matrix::Identity(a.rows(), a.cols());
    double log_total = 0.0;
    if (power > 0) {
        Matrix base = a;
        double log_base = 0.0;
        bool started = false;
        while (power > 0) {
            if (power & 1) {
                result = started ? Matrix(result * base) : base;
                log_total = started ? log_total + log_base : log_base;
                started = true;
                double n = result.norm();
                if (n == 0.0) {
                    if (log_scale) *log_scale = -std::numeric_limits<double>::infinity();
                    return result;
                }
                result /= n;
                log_total += std::log(n);
            }
            power >>= 1;
            if (power > 0) {
                base = base * base;
                log_base *= 2.0;
                double n = base.norm();
                if (n == 0.0) {
                    if (log_scale) *log_scale = -std::numeric_limits<double>::infinity();
                    return Matrix::Zero(a.rows(), a.cols());
                }
                base /= n;
                log_base += std::log(n);
            }
        }
    }
    if (log_scale) *log_scale = log_total;
    return result;
}

Matrix fix_phase_first_entry(const Matrix &m, double tol) {
    const double threshold = tol * max_abs(m);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (std::abs(m(i, j)) > threshold) {
                return m * (std::abs(m(i, j)) / m(i, j));
            }
        }
    }
    return m;
}

}  // namespace sptmqc::linalg
