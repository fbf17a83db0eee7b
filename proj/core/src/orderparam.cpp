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

#include "sptmqc/orderparam.hpp"

#include <cmath>
#include <numbers>

#include "sptmqc/mqc.hpp"

namespace sptmqc {

StringOrderResult string_order_bare(const MPSTensor &tensor, Axis axis, int n_max) {
    if (axis != Axis::x && axis != Axis::z) {
        throw DomainError("string order is defined for the x and z rotations only");
    }
    if (n_max < 0) throw DomainError("n_max must be non-negative");
    const Matrix u = spin1_rotation(axis, std::numbers::pi / 2);
    const FixedPoints fp = channel_fixed_points(tensor);
    const TransferChannel channel(tensor.scaled(1.0 / std::sqrt(fp.spectral_radius)), u);

    StringOrderResult out;
    out.axis = axis;
    out.degenerate = fp.degenerate;
    Matrix x = fp.right;
    for (int n = 0; n <= n_max; ++n) {
        out.values_by_n.push_back((fp.left * x).trace());
        x = channel.apply(x);
    }
    const Matrix projector = linalg::cluster_projector(channel.matrix_form(), 1.0);
    const Matrix limit = linalg::unvec(projector * linalg::vec(fp.right), tensor.bond_dim());
    out.limit = (fp.left * limit).trace().real();
    return out;
}

StringOrderResult string_order_renormalized(const RenormResult &result, int n_max) {
    StringOrderResult out = string_order_bare(result.tensor.parent(), result.axis, n_max);
    out.degenerate = out.degenerate || result.degenerate;
    if (result.degenerate && result.xi_tilde.is_infinite() && result.m == kLimitDepth && !result.stalled) {
        out.limit = std::norm(result.u_tilde.trace());
    }
    return out;
}

double closed_form_order(const RenormResult &result) {
    return 0.5 * std::norm((result.lambda_tilde * result.u_tilde).trace());
}

Theorem2Report theorem2_check(const FactorizedTensor &tensor) {
    Theorem2Report report;
    double fidelity[2] = {0.0, 0.0};
    double order[2] = {0.0, 0.0};
    const Axis axes[2] = {Axis::x, Axis::z};
    for (int k = 0; k < 2; ++k) {
        const RenormResult limit = flow_limit(tensor, axes[k]);
        report.stalled = report.stalled || limit.stalled;
        if (limit.xi_tilde.is_infinite()) {
            report.excluded = true;
            continue;
        }
        fidelity[k] = gate_fidelity(limit, std::numbers::pi / 2).fidelity;
        order[k] = string_order_renormalized(limit).limit;
    }
    report.f_limit = std::min(fidelity[0], fidelity[1]);
    report.o_x = order[0];
    report.o_z = order[1];
    const bool perfect = std::abs(report.f_limit - 1.0) < 1e-6;
    const bool maximal = std::abs(report.o_x - 0.5) < 1e-6 && std::abs(report.o_z - 0.5) < 1e-6;
    report.consistent = perfect == maximal;
    return report;
}

}  // namespace sptmqc
