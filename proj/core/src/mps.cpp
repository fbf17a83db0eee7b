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

#include "sptmqc/mps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

namespace sptmqc {

using linalg::vec;
using linalg::unvec;

MPSTensor::MPSTensor(std::vector<Matrix> matrices, std::vector<std::string> labels)
    : matrices_(std::move(matrices)), labels_(std::move(labels)) {
    if (matrices_.empty()) {
        throw EmptyError("MPS tensor needs at least one matrix");
    }
    const Eigen::Index dim = matrices_.front().rows();
    for (const auto &m : matrices_) {
        if (m.rows() != m.cols() || m.rows() != dim || dim == 0) {
            throw ShapeError("MPS matrices must all be square with the same nonzero dimension");
        }
    }
    if (labels_.size() != matrices_.size()) {
        throw ShapeError("label count " + std::to_string(labels_.size()) + " does not match physical dimension " +
                         std::to_string(matrices_.size()));
    }
}

std::size_t MPSTensor::index_of(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw LabelError("unknown basis label '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

MPSTensor MPSTensor::scaled(complex factor) const {
    std::vector<Matrix> out;
    out.reserve(matrices_.size());
    for (const auto &m : matrices_) {
        out.push_back(factor * m);
    }
    return MPSTensor(std::move(out), labels_);
}

MPSTensor build_mps(std::vector<Matrix> matrices, std::vector<std::string> labels) {
    return MPSTensor(std::move(matrices), std::move(labels));
}

TransferChannel::TransferChannel(const MPSTensor &source, std::optional<Matrix> insert)
    : source_(source), insert_(std::move(insert)) {
    const Eigen::Index d = source_.physical_dim();
    const Eigen::Index dim = source_.bond_dim();
    matrix_ = Matrix::Zero(dim * dim, dim * dim);
    if (!insert_) {
        for (const auto &a : source_.matrices()) {
            matrix_ += linalg::kron(a.conjugate(), a);
        }
        return;
    }
    if (insert_->rows() != d || insert_->cols() != d) {
        throw ShapeError("channel insert must be d x d");
    }
    for (Eigen::Index nu = 0; nu < d; ++nu) {
        Matrix mixed = Matrix::Zero(dim, dim);
        for (Eigen::Index eta = 0; eta < d; ++eta) {
            mixed += (*insert_)(nu, eta) * source_.matrix(eta);
        }
        matrix_ += linalg::kron(source_.matrix(nu).conjugate(), mixed);
    }
}

Matrix TransferChannel::apply(const Matrix &x) const {
    return unvec(matrix_ * vec(x), source_.bond_dim());
}

Matrix TransferChannel::apply_adjoint(const Matrix &x) const {
    return unvec(matrix_.adjoint() * vec(x), source_.bond_dim());
}

TransferChannel transfer_channel(const MPSTensor &tensor, std::optional<Matrix> insert) {
    return TransferChannel(tensor, std::move(insert));
}

Length correlation_length(const std::vector<complex> &sorted_spectrum) {
    if (sorted_spectrum.size() < 2) {
        return Length::finite(0.0);
    }
    const double top = std::abs(sorted_spectrum[0]);
    const double second = std::abs(sorted_spectrum[1]);
    if (top == 0.0 || second >= (1.0 - kDegeneracyGap) * top) {
        return Length::infinite();
    }
    if (second == 0.0) {
        return Length::finite(0.0);
    }
    return Length::finite(-1.0 / std::log(second / top));
}

FixedPoints channel_fixed_points(const MPSTensor &tensor) {
    const Eigen::Index dim = tensor.bond_dim();
    TransferChannel channel(tensor);
    FixedPoints fp;
    auto raw = linalg::sorted_eigenvalues(channel.matrix_form());
    fp.spectral_radius = std::abs(raw.front());
    if (fp.spectral_radius == 0.0) {
        throw DegeneracyError("transfer channel is nilpotent", raw);
    }
    const Matrix normalized = channel.matrix_form() / fp.spectral_radius;
    for (auto &v : raw) {
        v /= fp.spectral_radius;
    }
    fp.spectrum = std::move(raw);
    fp.xi = correlation_length(fp.spectrum);
    fp.degenerate = fp.xi.is_infinite();

    const Matrix projector = linalg::cluster_projector(normalized, complex(1.0, 0.0));
    const Vector id = vec(Matrix::Identity(dim, dim));
    Matrix right = linalg::hermitian_part(unvec(projector * id, dim));
    Matrix left = linalg::hermitian_part(unvec(projector.adjoint() * id, dim));
    if (right.trace().real() < 0) right = -right;
    if (left.trace().real() < 0) left = -left;
    right /= right.trace().real() / static_cast<double>(dim);
    const complex overlap = (left * right).trace();
    if (std::abs(overlap) < 1e-300) {
        throw DegeneracyError("fixed points of the transfer channel are orthogonal", fp.spectrum);
    }
    left /= overlap.real();
    fp.left = std::move(left);
    fp.right = std::move(right);
    return fp;
}

CanonicalData canonicalize(const MPSTensor &tensor, DegeneracyPolicy policy) {
    FixedPoints fp = channel_fixed_points(tensor);
    if (fp.degenerate && policy == DegeneracyPolicy::Strict) {
        throw DegeneracyError("transfer channel has no unique dominant eigenvalue", fp.spectrum);
    }
    const Eigen::Index dim = tensor.bond_dim();
    const double scale = std::sqrt(fp.spectral_radius);
    MPSTensor rescaled = tensor.scaled(1.0 / scale);

    Eigen::SelfAdjointEigenSolver<Matrix> solver(fp.right);
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    const bool invertible = lo > 1e-10 * hi;
    if (!invertible && policy == DegeneracyPolicy::Strict) {
        throw DegeneracyError("right fixed point is singular", fp.spectrum);
    }

    CanonicalData out{rescaled, fp.right, fp.left, fp.spectrum, fp.xi, fp.degenerate, false, scale,
                      Matrix::Identity(dim, dim)};
    if (invertible) {
        const Matrix g = linalg::sqrt_psd(fp.right);
        const Matrix g_inv = g.inverse();
        std::vector<Matrix> gauged;
        gauged.reserve(tensor.matrices().size());
        for (const auto &a : rescaled.matrices()) {
            gauged.push_back(g_inv * a * g);
        }
        Matrix lambda = linalg::hermitian_part(g * fp.left * g);
        lambda /= lambda.trace().real();
        out.tensor = MPSTensor(std::move(gauged), tensor.labels());
        out.right_fixed_point = Matrix::Identity(dim, dim);
        out.left_fixed_point = std::move(lambda);
        out.gauge_fixed = true;
        out.gauge = g;
    }
    return out;
}

complex amplitude(const MPSTensor &tensor, std::span<const std::size_t> outcome) {
    if (outcome.empty()) {
        throw DomainError("amplitude needs at least one site");
    }
    Matrix product = Matrix::Identity(tensor.bond_dim(), tensor.bond_dim());
    for (std::size_t i : outcome) {
        if (i >= tensor.matrices().size()) {
            throw LabelError("basis index " + std::to_string(i) + " out of range");
        }
        product = product * tensor.matrix(i);
    }
    return product.trace();
}

complex amplitude(const MPSTensor &tensor, std::span<const std::string> outcome) {
    std::vector<std::size_t> indices;
    indices.reserve(outcome.size());
    for (const auto &label : outcome) {
        indices.push_back(tensor.index_of(label));
    }
    return amplitude(tensor, std::span<const std::size_t>(indices));
}

namespace {

void check_insert(const MPSTensor &tensor, const Matrix &u) {
    if (u.rows() != tensor.physical_dim() || u.cols() != tensor.physical_dim()) {
        throw ShapeError("string operator must be d x d");
    }
}

}  // namespace

complex string_expectation_by_channel(const MPSTensor &tensor, const Matrix &u, int n) {
    check_insert(tensor, u);
    if (n < 0) {
        throw DomainError("string length must be non-negative");
    }
    FixedPoints fp = channel_fixed_points(tensor);
    TransferChannel channel(tensor.scaled(1.0 / std::sqrt(fp.spectral_radius)), u);
    Matrix x = fp.right;
    for (int k = 0; k < n; ++k) {
        x = channel.apply(x);
    }
    return (fp.left * x).trace();
}

complex string_expectation_by_enumeration(const MPSTensor &tensor, const Matrix &u, int n) {
    check_insert(tensor, u);
    if (n < 0) {
        throw DomainError("string length must be non-negative");
    }
    if (n > 6) {
        throw ResourceError("explicit outcome enumeration is limited to n <= 6");
    }
    FixedPoints fp = channel_fixed_points(tensor);
    const MPSTensor a = tensor.scaled(1.0 / std::sqrt(fp.spectral_radius));
    const Eigen::Index d = a.physical_dim();
    const Eigen::Index dim = a.bond_dim();
    std::vector<Matrix> rotated(d, Matrix::Zero(dim, dim));
    for (Eigen::Index nu = 0; nu < d; ++nu) {
        for (Eigen::Index eta = 0; eta < d; ++eta) {
            rotated[nu] += u(nu, eta) * a.matrix(eta);
        }
    }
    // Depth-first over outcome strings, sharing prefix products.
    complex total = 0.0;
    std::function<void(int, const Matrix &, const Matrix &)> descend = [&](int depth, const Matrix &ket,
                                                                          const Matrix &bra) {
        if (depth == n) {
            total += (fp.left * ket * fp.right * bra.adjoint()).trace();
            return;
        }
        for (Eigen::Index nu = 0; nu < d; ++nu) {
            descend(depth + 1, ket * rotated[nu], bra * a.matrix(nu));
        }
    };
    descend(0, Matrix::Identity(dim, dim), Matrix::Identity(dim, dim));
    return total;
}

complex brute_force_string_expectation(const MPSTensor &tensor, const Matrix &u, int n) {
    if (n > 10) {
        throw ResourceError("brute-force string expectation is limited to n <= 10");
    }
    const complex by_channel = string_expectation_by_channel(tensor, u, n);
    if (n > 6) {
        return by_channel;
    }
    const complex by_sum = string_expectation_by_enumeration(tensor, u, n);
    if (std::abs(by_sum - by_channel) > 1e-9 * std::max(1.0, std::abs(by_sum))) {
        throw std::logic_error("string expectation routes disagree");
    }
    return by_sum;
}

}  // namespace sptmqc
