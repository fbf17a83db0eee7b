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

#ifndef SPTMQC_TOYMODEL_HPP
#define SPTMQC_TOYMODEL_HPP

#include "sptmqc/symmetry.hpp"

namespace sptmqc {

/// Point on the sphere of S4-symmetric toy states. theta = pi is accepted
/// as the South pole limit point.
struct ToyModelParams {
    double theta = 0.0;
    double phi = 0.0;
};

/// Maps arbitrary (theta, phi) into theta in [0, pi], phi in [0, 2 pi).
/// Sets *wrapped when the input was out of range.
ToyModelParams wrap_params(ToyModelParams p, bool *wrapped = nullptr);

/// The three junk operators a_mu(theta, phi), already canonical.
std::array<Matrix, 3> toy_junk(ToyModelParams p);

/// A_mu = sigma_mu kron a_mu together with both junk symmetries. Out-of-range
/// parameters are wrapped and a warning is written to stderr.
FactorizedTensor toy_tensor(ToyModelParams p);

/// Unnormalized AKLT tensor A_mu = sigma_mu, labels x, y, z.
MPSTensor aklt();

/// The AKLT tensor as a factorized tensor with a one-dimensional junk space.
FactorizedTensor aklt_factorized();

/// 2 arctan 2, where the rotated pair of the z-buffered limit vanishes.
double critical_theta();

}  // namespace sptmqc

#endif
