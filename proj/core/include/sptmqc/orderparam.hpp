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

#ifndef SPTMQC_ORDERPARAM_HPP
#define SPTMQC_ORDERPARAM_HPP

#include <vector>

#include "sptmqc/renorm.hpp"

namespace sptmqc {

struct StringOrderResult {
    Axis axis = Axis::z;
    std::vector<complex> values_by_n;  ///< string expectation on n = 0..n_max sites
    double limit = 0.0;
    bool degenerate = false;  ///< the identity channel has a degenerate top eigenvalue
};

/// String order of the pi/2 rotation about `axis` (x or z). Partial values
/// come from the mixed channel, the limit from its spectral projection onto
/// eigenvalue one.
StringOrderResult string_order_bare(const MPSTensor &tensor, Axis axis, int n_max = 50);

/// The same on a buffered tensor. A degenerate fixed point whose rotated pair
/// vanishes returns |tr U~|^2 instead of the projected limit.
StringOrderResult string_order_renormalized(const RenormResult &result, int n_max = 50);

/// 1/2 |tr(Lambda~ U~)|^2, the closed form valid at a non-degenerate fixed point.
double closed_form_order(const RenormResult &result);

struct Theorem2Report {
    double f_limit = 0.0;  ///< min of the x and z limit fidelities at theta = pi/2
    double o_x = 0.0;
    double o_z = 0.0;
    bool consistent = false;
    bool excluded = false;  ///< a flow limit has divergent xi~
    bool stalled = false;
};

/// Checks that the limit fidelity is one exactly when both limit order
/// parameters equal 1/2 (tolerance 1e-6).
Theorem2Report theorem2_check(const FactorizedTensor &tensor);

}  // namespace sptmqc

#endif
