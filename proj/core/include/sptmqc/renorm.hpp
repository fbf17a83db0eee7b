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

#ifndef SPTMQC_RENORM_HPP
#define SPTMQC_RENORM_HPP

#include <vector>

#include "sptmqc/symmetry.hpp"

namespace sptmqc {

/// Block structure of a junk operator that commutes with an involutive
/// junk symmetry. Blocks are eigenvalue clusters (relative gap 1e-8), which
/// are literal Jordan blocks only in the normal case.
struct JordanSpectrum {
    std::vector<complex> eigenvalues;  ///< one per block, by modulus desc
    std::vector<int> block_dims;
    std::vector<int> chi_labels;  ///< +1 / -1 eigenvalue of the symmetry on the block
    Length zeta = Length::infinite();
    bool normal = true;
};

/// Throws SymmetryError if u_junk is not an involution commuting with a.
JordanSpectrum junk_spectrum(const Matrix &a, const Matrix &u_junk);

/// Depth value reported for the m -> infinity limit.
inline constexpr int kLimitDepth = -1;

struct RenormResult {
    int m = 0;  ///< buffering depth, kLimitDepth for the flow limit
    Axis axis = Axis::z;
    FactorizedTensor tensor;  ///< buffered, rescaled tensor
    Matrix a_plus;            ///< (a_first + a_second) / 2 of the rotated pair
    Matrix a_minus;
    Matrix pi_projector;  ///< support of the junk right fixed point
    Matrix lambda_tilde;  ///< junk left fixed point, trace one
    Matrix u_tilde;       ///< Pi U^(J) Pi for the buffering axis generator
    Length xi_tilde = Length::infinite();
    bool degenerate = false;  ///< divergent renormalized correlation length
    bool stalled = false;     ///< divergent flow length; limit is a representative
};

/// Indices (first, second) of the components rotated into each other by
/// the pi/2 rotation about `axis`: (x, y) for z, (y, z) for x.
std::pair<int, int> rotated_pair(Axis axis);

/// Postselected buffering with m sites on each side:
/// a_mu -> a_axis^m a_mu a_axis^m, rescaled to unit channel spectral radius.
/// m = 0 returns the input tensor unchanged. Throws DomainError for m < 0 or
/// an axis other than x, z.
RenormResult buffer(const FactorizedTensor &tensor, Axis axis, int m);

/// Analytic m -> infinity limit: the junk space is projected onto the
/// leading block of a_axis. Throws StalledFlowError when the flow length
/// diverges. A limit whose rotated pair vanishes is returned flagged
/// degenerate with divergent xi_tilde.
RenormResult fixed_point(const FactorizedTensor &tensor, Axis axis);

/// fixed_point when the flow converges; otherwise the stalled flow's
/// representative, the tensor restricted to the span of all leading-modulus
/// blocks, flagged `stalled`.
RenormResult flow_limit(const FactorizedTensor &tensor, Axis axis);

Length xi_tilde(const RenormResult &result);

}  // namespace sptmqc

#endif
