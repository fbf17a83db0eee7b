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

#include "sptmqc/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "extended.hpp"

namespace sptmqc {

namespace {

struct Block {
    complex value;
    int dim;
    int chi;
};

void check_buffer_axis(Axis axis) {
    if (axis != Axis::x && axis != Axis::z) {
        throw DomainError("buffering is defined along the x or z axis only");
    }
}

std::vector<Block> sector_blocks(const Matrix &a, int chi, bool normal) {
    std::vector<Block> blocks;
    if (a.rows() == 0) return blocks;
    if (normal) {
        Eigen::ComplexEigenSolver<Matrix> solver(a, false);
        for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
            blocks.push_back({solver.eigenvalues()(k), 1, chi});
        }
        return blocks;
    }
    Eigen::ComplexSchur<Matrix> schur(a);
    const Vector t_diag = schur.matrixT().diagonal();
    std::vector<complex> diag(t_diag.data(), t_diag.data() + t_diag.size());
    linalg::sort_spectrum(diag);
    const double scale = std::max(1.0, std::abs(diag.front()));
    std::vector<std::pair<complex, int>> clusters;  // running sum, count
    for (complex v : diag) {
        bool merged = false;
        for (auto &[sum, count] : clusters) {
            if (std::abs(sum / static_cast<double>(count) - v) <= kDegeneracyGap * scale) {
                sum += v;
                ++count;
                merged = true;
                break;
            }
        }
        if (!merged) clusters.emplace_back(v, 1);
    }
    for (auto &[sum, count] : clusters) {
        blocks.push_back({sum / static_cast<double>(count), count, chi});
    }
    return blocks;
}

Matrix leading_limit_operator(const Matrix &a, complex leading) {
    const Eigen::Index n = a.rows();
    const Matrix p1 = linalg::cluster_projector(a, leading);
    const Matrix nil = (a - leading * Matrix::Identity(n, n)) * p1;
    const double anorm = std::max(a.norm(), 1e-300);
    Matrix limit = p1;
    Matrix power = p1;
    for (Eigen::Index k = 1; k < n; ++k) {
        power = nil * power;
        if (power.norm() <= 1e-9 * std::pow(anorm, static_cast<double>(k))) break;
        limit = power;
    }
    return limit / limit.norm();
}

complex phase_reference(const std::array<Matrix, 3> &junk, int axis) {
    auto largest = [](const Matrix &m) {
        Eigen::Index r = 0, c = 0;
        m.cwiseAbs().maxCoeff(&r, &c);
        return m(r, c);
    };
    const Matrix &a = junk[axis];
    const complex tr = a.trace();
    if (a.norm() > 0) {
        if (std::abs(tr) > 1e-12 * a.norm()) return tr;
        return largest(a);
    }
    for (const auto &m : junk) {
        if (m.norm() > 0) return largest(m);
    }
    return 1.0;
}

RenormResult assemble(const FactorizedTensor &source, Axis axis, std::array<Matrix, 3> junk, int depth,
                      bool normalize) {
    const Generator gen = generator_for(axis);
    std::map<Generator, Matrix> symmetries;
    auto it = source.virtual_junk_symmetries().find(gen);
    if (it != source.virtual_junk_symmetries().end()) {
        symmetries.emplace(gen, it->second);
    }
    FixedPoints fp = channel_fixed_points(FactorizedTensor(junk, {}).parent());
    if (normalize) {
        const complex ref = phase_reference(junk, index(axis));
        const complex factor = (std::conj(ref) / std::abs(ref)) / std::sqrt(fp.spectral_radius);
        for (auto &m : junk) m *= factor;
    }
    const auto [first, second] = rotated_pair(axis);
    RenormResult out{depth,
                     axis,
                     FactorizedTensor(junk, std::move(symmetries)),
                     0.5 * (junk[first] + junk[second]),
                     0.5 * (junk[first] - junk[second]),
                     Matrix(),
                     Matrix(),
                     Matrix(),
                     fp.xi,
                     fp.degenerate,
                     false};
    const Matrix left_junk = linalg::trace_outer(fp.left, 2);
    out.lambda_tilde = linalg::hermitian_part(left_junk / left_junk.trace());
    out.pi_projector = linalg::support_projector(linalg::trace_outer(fp.right, 2));
    const Eigen::Index jdim = out.pi_projector.rows();
    const Matrix u = it != source.virtual_junk_symmetries().end() ? it->second : Matrix::Identity(jdim, jdim);
    out.u_tilde = out.pi_projector * u * out.pi_projector;
    return out;
}

}  // namespace

JordanSpectrum junk_spectrum(const Matrix &a, const Matrix &u_junk) {
    if (a.rows() != a.cols() || u_junk.rows() != a.rows() || u_junk.cols() != a.cols()) {
        throw ShapeError("junk operator and symmetry must be square with equal dimension");
    }
    const Eigen::Index n = a.rows();
    const double anorm = std::max(1.0, a.norm());
    if (linalg::max_abs(u_junk * u_junk - Matrix::Identity(n, n)) > 1e-8) {
        throw SymmetryError("junk symmetry does not square to the identity");
    }
    if (linalg::max_abs(u_junk * a - a * u_junk) > 1e-8 * anorm) {
        throw SymmetryError("junk symmetry does not commute with the junk operator");
    }
    JordanSpectrum out;
    out.normal = linalg::max_abs(a * a.adjoint() - a.adjoint() * a) < 1e-10 * anorm * anorm;

    Eigen::SelfAdjointEigenSolver<Matrix> sym(linalg::hermitian_part(u_junk));
    std::vector<Block> blocks;
    for (int chi : {+1, -1}) {
        std::vector<Eigen::Index> cols;
        for (Eigen::Index k = 0; k < n; ++k) {
            if ((sym.eigenvalues()(k) > 0) == (chi > 0)) cols.push_back(k);
        }
        Matrix q(n, static_cast<Eigen::Index>(cols.size()));
        for (std::size_t k = 0; k < cols.size(); ++k) {
            q.col(static_cast<Eigen::Index>(k)) = sym.eigenvectors().col(cols[k]);
        }
        auto sector = sector_blocks(q.adjoint() * a * q, chi, out.normal);
        blocks.insert(blocks.end(), sector.begin(), sector.end());
    }
    std::stable_sort(blocks.begin(), blocks.end(), [](const Block &l, const Block &r) {
        const double ml = std::abs(l.value), mr = std::abs(r.value);
        if (ml != mr) return ml > mr;
        if (l.value.real() != r.value.real()) return l.value.real() > r.value.real();
        if (l.value.imag() != r.value.imag()) return l.value.imag() > r.value.imag();
        return l.chi > r.chi;
    });
    for (const auto &b : blocks) {
        out.eigenvalues.push_back(b.value);
        out.block_dims.push_back(b.dim);
        out.chi_labels.push_back(b.chi);
    }
    if (blocks.size() < 2) {
        out.zeta = Length::finite(0.0);
        return out;
    }
    const double l1 = std::abs(blocks[0].value);
    const double l2 = std::abs(blocks[1].value);
    if (l1 == 0.0 || l2 >= (1.0 - kDegeneracyGap) * l1) {
        out.zeta = Length::infinite();
    } else if (l2 <= 1e-13 * l1) {  // rank-deficient up to rounding
        out.zeta = Length::finite(0.0);
    } else {
        out.zeta = Length::finite(-1.0 / std::log(l2 / l1));
    }
    return out;
}

std::pair<int, int> rotated_pair(Axis axis) {
    check_buffer_axis(axis);
    return axis == Axis::z ? std::pair{0, 1} : std::pair{1, 2};
}

RenormResult buffer(const FactorizedTensor &tensor, Axis axis, int m) {
    check_buffer_axis(axis);
    if (m < 0) {
        throw DomainError("buffering depth must be non-negative");
    }
    if (m == 0) {
        return assemble(tensor, axis, tensor.junk_parts(), 0, false);
    }
    const Matrix power = linalg::scaled_power(tensor.junk(index(axis)), m);
    std::array<Matrix, 3> junk;
    for (int mu = 0; mu < 3; ++mu) {
        junk[mu] = power * tensor.junk(mu) * power;
    }
    RenormResult out = assemble(tensor, axis, std::move(junk), m, true);
    // Buffering can push the gap below double resolution (it shrinks
    // exponentially in m near a degenerate fixed point); resolve it in quad.
    if (out.xi_tilde.is_infinite() || out.xi_tilde.value() > 1e6) {
        out.xi_tilde = detail::buffered_correlation_length(tensor.junk_parts(), index(axis), m);
        out.degenerate = out.xi_tilde.is_infinite();
    }
    return out;
}

RenormResult fixed_point(const FactorizedTensor &tensor, Axis axis) {
    check_buffer_axis(axis);
    const Matrix &a = tensor.junk(index(axis));
    const JordanSpectrum spectrum = junk_spectrum(a, tensor.junk_symmetry(generator_for(axis)));
    if (spectrum.zeta.is_infinite()) {
        throw StalledFlowError("flow length diverges; buffering stalls before reaching a fixed point");
    }
    const Matrix limit = leading_limit_operator(a, spectrum.eigenvalues.front());
    std::array<Matrix, 3> junk;
    for (int mu = 0; mu < 3; ++mu) {
        junk[mu] = limit * tensor.junk(mu) * limit;
    }
    RenormResult out = assemble(tensor, axis, std::move(junk), kLimitDepth, true);
    const auto [first, second] = rotated_pair(axis);
    const double along = out.tensor.junk(index(axis)).norm();
    if (out.tensor.junk(first).norm() <= 1e-10 * along && out.tensor.junk(second).norm() <= 1e-10 * along) {
        out.degenerate = true;
        out.xi_tilde = Length::infinite();
    }
    return out;
}

RenormResult flow_limit(const FactorizedTensor &tensor, Axis axis) {
    check_buffer_axis(axis);
    const Matrix &a = tensor.junk(index(axis));
    const JordanSpectrum spectrum = junk_spectrum(a, tensor.junk_symmetry(generator_for(axis)));
    if (spectrum.zeta.is_finite()) {
        return fixed_point(tensor, axis);
    }
    const double top = std::abs(spectrum.eigenvalues.front());
    const Eigen::Index n = a.rows();
    Matrix projector = Matrix::Zero(n, n);
    std::vector<complex> seen;
    for (complex v : spectrum.eigenvalues) {
        if (std::abs(v) < (1.0 - kDegeneracyGap) * top) continue;
        bool duplicate = std::any_of(seen.begin(), seen.end(), [&](complex s) {
            return std::abs(s - v) <= kDegeneracyGap * std::max(1.0, top);
        });
        if (duplicate) continue;
        seen.push_back(v);
        projector += linalg::cluster_projector(a, v);
    }
    std::array<Matrix, 3> junk;
    for (int mu = 0; mu < 3; ++mu) {
        junk[mu] = projector * tensor.junk(mu) * projector;
    }
    RenormResult out = assemble(tensor, axis, std::move(junk), kLimitDepth, true);
    out.stalled = true;
    return out;
}

Length xi_tilde(const RenormResult &result) {
    return result.xi_tilde;
}

}  // namespace sptmqc
