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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sptmqc/toymodel.hpp"

using namespace sptmqc;

namespace {

constexpr double kPi = std::numbers::pi;

MPSTensor canonical_aklt() { return canonicalize(aklt()).tensor; }

}  // namespace

TEST(Rotation, RodriguesMatchesHandWrittenMatrices) {
    Matrix rz(3, 3);
    rz << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    EXPECT_LT(linalg::max_abs(spin1_rotation(Axis::z, kPi / 2) - rz), 1e-15);
    Matrix rx(3, 3);
    rx << 1, 0, 0, 0, 0, -1, 0, 1, 0;
    EXPECT_LT(linalg::max_abs(spin1_rotation(Axis::x, kPi / 2) - rx), 1e-15);
    const Matrix r = spin1_rotation(Axis::y, 0.37);
    EXPECT_LT(linalg::max_abs(r * r.adjoint() - Matrix::Identity(3, 3)), 1e-15);
    EXPECT_NEAR(r.determinant().real(), 1.0, 1e-14);
}

TEST(Rotation, AxisNames) {
    EXPECT_EQ(parse_axis("x"), Axis::x);
    EXPECT_EQ(parse_axis("z"), Axis::z);
    EXPECT_EQ(axis_name(Axis::y), 'y');
    EXPECT_THROW((void)parse_axis("w"), DomainError);
    EXPECT_EQ(generator_for(Axis::z), Generator::RotZ);
    EXPECT_THROW((void)generator_for(Axis::y), DomainError);
}

TEST(VirtualSymmetry, AkltQuarterTurn) {
    const SymmetryAction act = extract_virtual_symmetry(canonical_aklt(), spin1_rotation(Axis::z, kPi / 2));
    EXPECT_LT(act.residual, 1e-12);
    EXPECT_NEAR(std::abs(act.character), 1.0, 1e-12);
    const Matrix &u = act.virtual_op;
    EXPECT_LT(linalg::max_abs(u * u.adjoint() - Matrix::Identity(2, 2)), 1e-12);
    // Conjugation by U implements the rotation on the Pauli triple.
    const Matrix sx = oracle::sigma(0), sy = oracle::sigma(1);
    const Matrix lhs = u * sx * u.adjoint();
    const double plus = linalg::max_abs(lhs - sy), minus = linalg::max_abs(lhs + sy);
    EXPECT_LT(std::min(plus, minus), 1e-12);
}

TEST(VirtualSymmetry, NonSymmetryIsRejected) {
    Matrix squash = Matrix::Identity(3, 3);
    squash(0, 0) = 0.5;
    EXPECT_THROW((void)extract_virtual_symmetry(canonical_aklt(), squash), NotASymmetryError);
}

TEST(Phase, AkltIsSymmetryProtected) {
    const PhaseLabel label = classify_d2_phase(canonical_aklt());
    EXPECT_EQ(label.value, Phase::D2_SPTO);
    EXPECT_NEAR(std::abs(label.commutator_sign - complex(-1.0)), 0.0, 1e-12);
}

TEST(Phase, ProductStateIsTrivial) {
    const MPSTensor product = build_mps({Matrix::Zero(1, 1), Matrix::Zero(1, 1), Matrix::Identity(1, 1)}, {"x", "y", "z"});
    const PhaseLabel label = classify_d2_phase(product);
    EXPECT_EQ(label.value, Phase::Trivial);
    EXPECT_NEAR(std::abs(label.commutator_sign - complex(1.0)), 0.0, 1e-12);
    EXPECT_THROW((void)factorize_protected_junk(product), FactorizationError);
}

TEST(Factorize, AkltHasOneDimensionalJunk) {
    const FactorizedTensor f = factorize_protected_junk(canonical_aklt());
    EXPECT_EQ(f.junk_dim(), 1);
    for (int mu = 0; mu < 3; ++mu) {
        EXPECT_LT(linalg::max_abs(f.protected_part(mu) - oracle::sigma(mu)), 1e-12);
        EXPECT_NEAR(std::abs(f.junk(mu)(0, 0)), 1.0 / std::sqrt(3.0), 1e-12);
    }
}

TEST(Factorize, RebuildsToyTensorUpToGauge) {
    const ToyModelParams p{1.1, 0.4};
    const FactorizedTensor f = factorize_protected_junk(toy_tensor(p).parent());
    ASSERT_EQ(f.junk_dim(), 2);
    for (int mu = 0; mu < 3; ++mu) {
        EXPECT_LT(linalg::max_abs(f.parent().matrix(mu) - linalg::kron(f.protected_part(mu), f.junk(mu))), 1e-10);
    }
    // Gauge invariant check: the junk transfer spectrum equals the oracle's.
    const auto want = oracle::toy_junk(p.theta, p.phi);
    const auto got_moduli = oracle::moduli(oracle::transfer_by_indices({f.junk(0), f.junk(1), f.junk(2)}));
    const auto want_moduli = oracle::moduli(oracle::transfer_by_indices({want[0], want[1], want[2]}));
    for (std::size_t k = 0; k < got_moduli.size(); ++k) EXPECT_NEAR(got_moduli[k], want_moduli[k], 1e-10);
}

TEST(Factorize, RejectsOddBondAndWrongPhysicalDimension) {
    const Matrix id3 = Matrix::Identity(3, 3);
    EXPECT_THROW((void)factorize_protected_junk(build_mps({id3, id3, id3}, {"x", "y", "z"})), FactorizationError);
    const Matrix id2 = Matrix::Identity(2, 2);
    EXPECT_THROW((void)factorize_protected_junk(build_mps({id2, id2}, {"a", "b"})), FactorizationError);
}

TEST(Factorize, MissingJunkSymmetryThrows) {
    const FactorizedTensor f(oracle::toy_junk(1.0, 0.2), {});
    EXPECT_THROW((void)f.junk_symmetry(Generator::RotZ), SymmetryError);
}

TEST(Octahedral, AkltAccepted) {
    const S4Report r = verify_s4_invariance(aklt());
    EXPECT_TRUE(r.accepted);
    EXPECT_LT(r.max_residual, 1e-10);
}

TEST(Octahedral, AnisotropicDeformationRejected) {
    const MPSTensor a = aklt();
    const MPSTensor deformed = build_mps({1.1 * a.matrix(0), a.matrix(1), a.matrix(2)}, {"x", "y", "z"});
    const S4Report r = verify_s4_invariance(deformed);
    EXPECT_FALSE(r.accepted);
    EXPECT_GT(r.max_residual, 1e-3);
}

TEST(Octahedral, ToyFamilyAcceptedOnGrid) {
    for (int i = 1; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const ToyModelParams p{kPi * i / 8.0, 2.0 * kPi * j / 8.0};
            const S4Report r = verify_s4_invariance(toy_tensor(p).parent());
            EXPECT_LT(r.max_residual, 1e-10) << "theta=" << p.theta << " phi=" << p.phi;
        }
    }
}
