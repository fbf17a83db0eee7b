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

#ifndef SPTMQC_LENGTH_HPP
#define SPTMQC_LENGTH_HPP

#include <optional>
#include <string>

namespace sptmqc {

/// A characteristic length (correlation length, flow length) that may be
/// divergent. Divergence is carried as a flag, never as a large float.
class Length {
  public:
    static Length finite(double value) { return Length(value); }
    static Length infinite() { return Length(); }

    bool is_finite() const { return value_.has_value(); }
    bool is_infinite() const { return !value_.has_value(); }

    /// Throws std::bad_optional_access for a divergent length.
    double value() const { return value_.value(); }
    double value_or(double fallback) const { return value_.value_or(fallback); }

    /// "inf" for a divergent length, otherwise 17 significant digits.
    std::string to_string() const;

    friend bool operator==(const Length &, const Length &) = default;

  private:
    Length() = default;
    explicit Length(double v) : value_(v) {}
    std::optional<double> value_;
};

}  // namespace sptmqc

#endif
