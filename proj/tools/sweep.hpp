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

#ifndef SPTMQC_TOOLS_SWEEP_HPP
#define SPTMQC_TOOLS_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "sptmqc/renorm.hpp"

namespace sptmqc::tools {

struct SweepRow {
    double theta = 0.0;
    double phi = 0.0;
    int m = 0;                ///< kInfiniteDepth for the limit
    double fidelity = 0.0;    ///< NaN when the rotation outcome has no weight
    double o_z = 0.0;
    double o_x = 0.0;
    Length zeta_z = Length::infinite();
    Length xi = Length::infinite();
    Length xi_tilde = Length::infinite();
    bool degenerate = false;  ///< xi_tilde diverges
};

/// Column order of the sweep table.
inline constexpr const char *kSweepHeader = "theta,phi,m,fidelity,O_z,O_x,zeta_z,xi,xi_tilde,degenerate";

/// The tensor a config refers to at (theta, phi); AKLT ignores both.
FactorizedTensor model_tensor(const SweepConfig &config, double theta, double phi);

/// Buffered tensor at depth m, the flow limit for kInfiniteDepth.
RenormResult renormalize(const FactorizedTensor &tensor, Axis axis, int m);

SweepRow evaluate_cell(const SweepConfig &config, double theta, double phi, int m);

/// Every (theta, phi, m) cell, evaluated on up to `threads` threads and
/// sorted by (theta, phi, m) with the limit last.
std::vector<SweepRow> run_sweep(const SweepConfig &config, int threads = 1);

struct ProtocolSummary {
    double theta = 0.0;
    double phi = 0.0;
    int m = 0;
    long long runs = 0;
    long long successes = 0;
    long long attempts = 0;
    double success_rate = 0.0;  ///< successes per attempt
    double p_succ = 0.0;        ///< Born probability of one attempt succeeding
    double sigma = 0.0;         ///< binomial standard error of success_rate
};

/// Runs `config.runs` independent protocol simulations per cell; run k is
/// seeded with splitmix64(splitmix64(seed) + k).
std::vector<ProtocolSummary> run_protocol(const SweepConfig &config, int threads = 1);

/// Single-point analysis; DegeneracyError propagates when the bare tensor
/// has no unique canonical form.
nlohmann::json point_report(const SweepConfig &config, double theta, double phi, int m);

std::string format_number(double value);
std::string format_length(const Length &value);
std::string format_depth(int m);

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows, const std::string &meta = "");
nlohmann::json rows_to_json(const std::vector<SweepRow> &rows);
void write_protocol_csv(std::ostream &out, const std::vector<ProtocolSummary> &rows, const std::string &meta = "");
nlohmann::json protocol_to_json(const std::vector<ProtocolSummary> &rows);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace sptmqc::tools

#endif
