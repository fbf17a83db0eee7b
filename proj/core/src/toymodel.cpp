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

#include "sptmqc/toymodel.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

namespace sptmqc {

namespace {

constexpr double kPi = std::numbers::pi;

// Unit vectors in the sigma_x/sigma_y plane, 120 degrees apart.
Matrix triad(int mu) {
    const double r = std::sqrt(3.0) / 2.0;
    const Matrix sx = linalg::pauli(0), sy = linalg::pauli(1);
    switch (mu) {
        case 0: return -0.5 * sx + r * sy;
        case 1: return -0.5 * sx - r * sy;
        default: return sx;
    }
}

}  // namespace

ToyModelParams wrap_params(ToyModelParams p, bool *wrapped) {
    ToyModelParams out = p;
    out.theta = std::fmod(out.theta, 2 * kPi);
    if (out.theta < 0) out.theta += 2 * kPi;
    if (out.theta > kPi) {
        out.theta = 2 * kPi - out.theta;
        out.phi += kPi;
    }
    out.phi = std::fmod(out.phi, 2 * kPi);
    if (out.phi < 0) out.phi += 2 * kPi;
    if (wrapped) *wrapped = out.theta != p.theta || out.phi != p.phi;
    return out;
}

std::array<Matrix, 3> toy_junk(ToyModelParams p) {
    p = wrap_params(p);
    const complex s = std::polar(std::sin(p.theta / 2), p.phi);
    const double c = std::cos(p.theta / 2);
    std::array<Matrix, 3> out;
    for (int mu = 0; mu < 3; ++mu) {
        out[mu] = (c * Matrix::Identity(2, 2) + s * triad(mu)) / std::sqrt(3.0);
    }
    return out;
}

FactorizedTensor toy_tensor(ToyModelParams p) {
    bool wrapped = false;
    const ToyModelParams q = wrap_params(p, &wrapped);
    if (wrapped) {
        std::cerr << "warning: toy parameters (" << p.theta << ", " << p.phi << ") wrapped to (" << q.theta << ", "
                  << q.phi << ")\n";
    }
    const double r = std::sqrt(3.0) / 2.0;
    std::map<Generator, Matrix> symmetries{
        {Generator::RotZ, linalg::pauli(0)},
        {Generator::RotX, 0.5 * linalg::pauli(0) - r * linalg::pauli(1)},
    };
    return FactorizedTensor(toy_junk(q), std::move(symmetries));
}

MPSTensor aklt() {
    return build_mps({linalg::pauli(0), linalg::pauli(1), linalg::pauli(2)}, {"x", "y", "z"});
}

FactorizedTensor aklt_factorized() {
    const Matrix a = Matrix::Constant(1, 1, 1.0 / std::sqrt(3.0));
    const Matrix one = Matrix::Identity(1, 1);
    return FactorizedTensor({a, a, a}, {{Generator::RotZ, one}, {Generator::RotX, one}});
}

double critical_theta() {
    return 2.0 * std::atan(2.0);
}

}  // namespace sptmqc
