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

#ifndef SPTMQC_TOOLS_CONFIG_HPP
#define SPTMQC_TOOLS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sptmqc/symmetry.hpp"

namespace sptmqc::tools {

/// Invalid configuration. `where` names the field and, for TOML input, the
/// line it came from.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string where, const std::string &what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
    const std::string &where() const { return where_; }

  private:
    std::string where_;
};

enum class Mode { fidelity, orderparam, lengths, protocol, point };
enum class Format { csv, json };

/// Depth value used in configs and output for the m -> infinity limit.
inline constexpr int kInfiniteDepth = -1;

struct SweepConfig {
    Mode mode = Mode::fidelity;
    std::string model = "toy";  ///< "toy" or "aklt"
    std::vector<double> thetas{1.5707963267948966};
    std::vector<double> phis{0.0};
    std::vector<int> m_list{0};
    double theta_gate = 1.5707963267948966;
    Axis axis = Axis::z;
    std::uint64_t seed = 0;
    long long runs = 1000;
    std::optional<std::string> output;
    Format format = Format::csv;
};

/// Parses "pi", "pi/2", "3*pi/4", "-pi", "theta_c", "theta_c/2" or a plain
/// number. Throws ConfigError naming `field` on anything else.
double parse_angle(const std::string &text, const std::string &field = "angle");

/// n points from lo to hi; the upper end is included when `endpoint`.
std::vector<double> linspace(double lo, double hi, int n, bool endpoint);

/// Reads TOML (by default) or JSON (".json" extension) and validates it.
SweepConfig load_config(const std::string &path);
SweepConfig parse_toml_config(const std::string &text, const std::string &source = "<string>");
SweepConfig parse_json_config(const std::string &text);

/// Throws ConfigError when counts, depths or the gate angle are out of range.
void validate(const SweepConfig &config);

Mode parse_mode(const std::string &name);
Format parse_format(const std::string &name);
std::string mode_name(Mode mode);

}  // namespace sptmqc::tools

#endif
