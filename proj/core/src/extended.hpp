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

#ifndef SPTMQC_SRC_EXTENDED_HPP
#define SPTMQC_SRC_EXTENDED_HPP

#include <array>

#include "sptmqc/length.hpp"
#include "sptmqc/linalg.hpp"

namespace sptmqc::detail {

/// Relative gap below which quad-precision eigenvalue moduli count as tied.
inline constexpr double kExtendedDegeneracyGap = 1e-31;

/// Correlation length of the tensor with protected parts sigma_mu and junk
/// parts P a_mu P, P = a_axis^m, evaluated entirely in quad precision from
/// the double-precision junk operators.
Length buffered_correlation_length(const std::array<Matrix, 3> &junk, int axis, long long m);

}  // namespace sptmqc::detail

#endif
