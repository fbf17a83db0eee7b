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

#include "sptmqc/symmetry.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace sptmqc {

namespace {

constexpr double kModulusOneTol = 1e-6;
constexpr double kAcceptTol = 1e-8;

double snap(double v) {
    for (double target : {-1.0, 0.0, 1.0}) {
        if (std::abs(v - target) < 1e-15) return target;
    }
    return v;
}

std::vector<Matrix> physically_rotated(const MPSTensor &tensor, const Matrix &u) {
    const Eigen::Index d = tensor.physical_dim();
    std::vector<Matrix> out(d, Matrix::Zero(tensor.bond_dim(), tensor.bond_dim()));
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            out[i] += u(i, j) * tensor.matrix(j);
        }
    }
    return out;
}

double relation_residual(const MPSTensor &tensor, const Matrix &u, const Matrix &v, complex character) {
    auto rotated = physically_rotated(tensor, u);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < tensor.physical_dim(); ++i) {
        worst = std::max(worst, linalg::max_abs(rotated[i] - character * v * tensor.matrix(i) * v.adjoint()));
    }
    return worst;
}

// Normalizes an operator whose square is a multiple of the identity so that
// it squares to +I, with a sign convention on the first nonzero entry.
Matrix involution_normalized(const Matrix &u) {
    const double dim = static_cast<double>(u.rows());
    const complex square = (u * u).trace() / dim;
    Matrix out = u / std::sqrt(square);
    const double threshold = 1e-9 * linalg::max_abs(out);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            complex z = out(i, j);
            if (std::abs(z) > threshold) {
                bool negative = std::abs(z.real()) > threshold ? z.real() < 0 : z.imag() < 0;
                return negative ? Matrix(-out) : out;
            }
        }
    }
    return out;
}

Matrix rotation_about(Axis axis, double angle) {
    Eigen::Vector3d n = Eigen::Vector3d::Zero();
    n(index(axis)) = 1.0;
    Eigen::Matrix3d cross;
    cross << 0, -n(2), n(1), n(2), 0, -n(0), -n(1), n(0), 0;
    Eigen::Matrix3d r =
        std::cos(angle) * Eigen::Matrix3d::Identity() + std::sin(angle) * cross + (1 - std::cos(angle)) * n * n.transpose();
    return r.unaryExpr([](double v) { return snap(v); }).cast<complex>();
}

}  // namespace

char axis_name(Axis a) {
    return "xyz"[index(a)];
}

Axis parse_axis(const std::string &name) {
    if (name == "x") return Axis::x;
    if (name == "y") return Axis::y;
    if (name == "z") return Axis::z;
    throw DomainError("unknown axis '" + name + "'");
}

Matrix spin1_rotation(Axis axis, double angle) {
    return rotation_about(axis, angle);
}

Generator generator_for(Axis axis) {
    switch (axis) {
        case Axis::x:
            return Generator::RotX;
        case Axis::z:
            return Generator::RotZ;
        default:
            throw DomainError("only x and z rotations generate the octahedral group here");
    }
}

SymmetryAction extract_virtual_symmetry(const MPSTensor &tensor, const Matrix &u) {
    TransferChannel channel(tensor, u);
    Eigen::ComplexEigenSolver<Matrix> solver(channel.matrix_form());
    Eigen::Index found = -1;
    int count = 0;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        if (std::abs(solver.eigenvalues()(k)) > 1.0 - kModulusOneTol) {
            found = k;
            ++count;
        }
    }
    if (count == 0) {
        throw NotASymmetryError("mixed channel has no modulus-one eigenvalue");
    }
    if (count > 1) {
        throw AmbiguityError("mixed channel has a degenerate modulus-one eigenspace");
    }
    const complex eigenvalue = solver.eigenvalues()(found);
    Matrix v = linalg::unvec(solver.eigenvectors().col(found), tensor.bond_dim());
    v = linalg::fix_phase_first_entry(linalg::polar_unitary(v));
    SymmetryAction out;
    out.physical = u;
    out.virtual_op = v;
    out.character = eigenvalue / std::abs(eigenvalue);
    out.residual = relation_residual(tensor, u, v, out.character);
    return out;
}

PhaseLabel classify_d2_phase(const MPSTensor &tensor) {
    const auto ux = extract_virtual_symmetry(tensor, spin1_rotation(Axis::x, std::numbers::pi));
    const auto uz = extract_virtual_symmetry(tensor, spin1_rotation(Axis::z, std::numbers::pi));
    if (ux.residual > kAcceptTol || uz.residual > kAcceptTol) {
        throw NotASymmetryError("tensor is not invariant under the pi rotations");
    }
    const Matrix &a = ux.virtual_op;
    const Matrix &b = uz.virtual_op;
    const Matrix commutator = a * b * a.adjoint() * b.adjoint();
    const double dim = static_cast<double>(tensor.bond_dim());
    const complex sign = commutator.trace() / dim;
    if (linalg::max_abs(commutator - sign * Matrix::Identity(commutator.rows(), commutator.cols())) > kModulusOneTol) {
        throw ReducibleVirtualSpaceError("group commutator is not proportional to the identity");
    }
    if (std::abs(sign - 1.0) < kAcceptTol) {
        return {Phase::Trivial, sign};
    }
    if (std::abs(sign + 1.0) < kAcceptTol) {
        return {Phase::D2_SPTO, sign};
    }
    throw ReducibleVirtualSpaceError("group commutator is neither +I nor -I");
}

FactorizedTensor::FactorizedTensor(std::array<Matrix, 3> junk_parts,
                                   std::map<Generator, Matrix> virtual_junk_symmetries)
    : protected_parts_{linalg::pauli(0), linalg::pauli(1), linalg::pauli(2)},
      junk_parts_(std::move(junk_parts)),
      virtual_junk_symmetries_(std::move(virtual_junk_symmetries)),
      parent_({linalg::kron(linalg::pauli(0), junk_parts_[0]), linalg::kron(linalg::pauli(1), junk_parts_[1]),
               linalg::kron(linalg::pauli(2), junk_parts_[2])},
              {"x", "y", "z"}) {}

const Matrix &FactorizedTensor::junk_symmetry(Generator g) const {
    auto it = virtual_junk_symmetries_.find(g);
    if (it == virtual_junk_symmetries_.end()) {
        throw SymmetryError("junk symmetry factor not available for this generator");
    }
    return it->second;
}

FactorizedTensor factorize_protected_junk(const MPSTensor &tensor) {
    if (tensor.physical_dim() != 3) {
        throw FactorizationError("protected/junk split needs a spin-1 tensor");
    }
    const Eigen::Index dim = tensor.bond_dim();
    if (dim % 2 != 0) {
        throw FactorizationError("bond dimension must be even");
    }
    if (classify_d2_phase(tensor).value != Phase::D2_SPTO) {
        throw FactorizationError("tensor is not in the D2 SPTO phase");
    }
    const Matrix uz = linalg::hermitian_part(
        involution_normalized(extract_virtual_symmetry(tensor, spin1_rotation(Axis::z, std::numbers::pi)).virtual_op));
    const Matrix ux = linalg::hermitian_part(
        involution_normalized(extract_virtual_symmetry(tensor, spin1_rotation(Axis::x, std::numbers::pi)).virtual_op));

    // Orthonormal basis of the +1 eigenspace of U_z, seeded by the standard
    // basis so that an already-factorized tensor keeps its basis.
    const Eigen::Index half = dim / 2;
    const Matrix plus = 0.5 * (Matrix::Identity(dim, dim) + uz);
    Matrix basis(dim, half);
    Eigen::Index found = 0;
    for (Eigen::Index k = 0; k < dim && found < half; ++k) {
        Vector v = plus.col(k);
        for (Eigen::Index j = 0; j < found; ++j) {
            v -= basis.col(j) * basis.col(j).dot(v);
        }
        const double n = v.norm();
        if (n > 1e-8) {
            basis.col(found++) = v / n;
        }
    }
    if (found < half) {
        throw FactorizationError("U_z eigenspaces are not balanced");
    }
    Matrix w(dim, dim);
    w.leftCols(half) = basis;
    w.rightCols(half) = ux * basis;

    std::array<Matrix, 3> junk;
    auto extract = [&](const Matrix &gauge) {
        const Matrix ax = gauge.adjoint() * tensor.matrix(0) * gauge;
        const Matrix ay = gauge.adjoint() * tensor.matrix(1) * gauge;
        const Matrix az = gauge.adjoint() * tensor.matrix(2) * gauge;
        junk[0] = ax.topRightCorner(half, half);
        junk[1] = complex(0, 1) * ay.topRightCorner(half, half);
        junk[2] = az.topLeftCorner(half, half);
    };
    extract(w);

    // Remaining freedom: the sign of the second half of the basis, which
    // flips a_x and a_y together. Pick Re tr(a_x) >= 0.
    double orientation = junk[0].trace().real();
    if (std::abs(orientation) <= 1e-12 * std::max(1.0, junk[0].norm())) {
        Eigen::Index r = 0, c = 0;
        junk[0].cwiseAbs().maxCoeff(&r, &c);
        orientation = junk[0](r, c).real();
    }
    if (orientation < 0) {
        w.rightCols(half) *= -1.0;
        extract(w);
    }

    double residual = 0.0;
    for (int mu = 0; mu < 3; ++mu) {
        const Matrix rebuilt = linalg::kron(linalg::pauli(mu), junk[mu]);
        residual = std::max(residual, linalg::max_abs(rebuilt - w.adjoint() * tensor.matrix(mu) * w));
    }
    if (residual > kAcceptTol) {
        throw FactorizationError("no factorizing basis within tolerance");
    }

    FactorizedTensor provisional(junk, {});
    std::map<Generator, Matrix> symmetries;
    for (Axis axis : {Axis::x, Axis::z}) {
        try {
            const auto action = extract_virtual_symmetry(provisional.parent(), spin1_rotation(axis, std::numbers::pi / 2));
            if (action.residual > kAcceptTol) continue;
            const auto factors = linalg::kron_factorize(action.virtual_op, 2);
            if (factors.residual > kAcceptTol) continue;
            symmetries.emplace(generator_for(axis), involution_normalized(factors.inner));
        } catch (const NotASymmetryError &) {
        } catch (const AmbiguityError &) {
        }
    }
    return FactorizedTensor(std::move(junk), std::move(symmetries));
}

S4Report verify_s4_invariance(const MPSTensor &tensor) {
    S4Report report;
    CanonicalData canonical = canonicalize(tensor, DegeneracyPolicy::Tolerant);
    const MPSTensor &a = canonical.tensor;
    const Eigen::Index dim = a.bond_dim();
    const Eigen::Index d = a.physical_dim();
    const Matrix id = Matrix::Identity(dim, dim);

    auto residual_for = [&](Axis axis) {
        const Matrix u = spin1_rotation(axis, std::numbers::pi / 2);
        if (u.rows() != d) {
            throw ShapeError("octahedral invariance needs a spin-1 tensor");
        }
        const auto rotated = physically_rotated(a, u);
        // Intertwiners X with X A_i = A'_i X span the null space of this map.
        Matrix map(d * dim * dim, dim * dim);
        for (Eigen::Index i = 0; i < d; ++i) {
            map.middleRows(i * dim * dim, dim * dim) =
                linalg::kron(a.matrix(i).transpose(), id) - linalg::kron(id, rotated[i]);
        }
        Eigen::JacobiSVD<Matrix> svd(map, Eigen::ComputeFullV);
        const auto &sv = svd.singularValues();
        const double cutoff = 1e-9 * std::max(1.0, sv(0));
        Vector combo = Vector::Zero(dim * dim);
        int null_count = 0;
        for (Eigen::Index k = sv.size() - 1; k >= 0 && sv(k) < cutoff; --k) {
            // Fixed generic weights so a degenerate null space yields an
            // invertible intertwiner.
            combo += complex(1.0 / (1.3 + null_count), 0.7 / (2.1 + null_count)) * svd.matrixV().col(k);
            ++null_count;
        }
        if (null_count == 0) {
            combo = svd.matrixV().col(sv.size() - 1);
        }
        const Matrix v = linalg::polar_unitary(linalg::unvec(combo, dim));
        double worst = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            worst = std::max(worst, linalg::max_abs(rotated[i] - v * a.matrix(i) * v.adjoint()));
        }
        return worst;
    };
    report.residual_x = residual_for(Axis::x);
    report.residual_z = residual_for(Axis::z);
    report.max_residual = std::max(report.residual_x, report.residual_z);
    report.accepted = report.max_residual < kAcceptTol;
    return report;
}

}  // namespace sptmqc
