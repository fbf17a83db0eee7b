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

#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>
#include <tuple>

#include <fmt/format.h>

#include "sptmqc/mqc.hpp"
#include "sptmqc/orderparam.hpp"
#include "sptmqc/toymodel.hpp"

namespace sptmqc::tools {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int sort_key(int m) {
    return m == kInfiniteDepth ? INT_MAX : m;
}

Length axis_zeta(const FactorizedTensor &tensor, Axis axis) {
    return junk_spectrum(tensor.junk(index(axis)), tensor.junk_symmetry(generator_for(axis))).zeta;
}

double fidelity_or_nan(const RenormResult &r, double theta) {
    try {
        return gate_fidelity(r, theta).fidelity;
    } catch (const NullOutcomeError &) {
        return kNaN;
    }
}

// A degenerate limit has a vanishing rotated pair, so its rotation outcome
// has no weight; the limit fidelity is read off a deep finite buffer instead.
double limit_fidelity(const FactorizedTensor &tensor, const RenormResult &limit, double theta) {
    if (!limit.degenerate || limit.stalled) return fidelity_or_nan(limit, theta);
    const Length zeta = axis_zeta(tensor, limit.axis);
    int depth = std::max(8, static_cast<int>(std::ceil(10.0 * zeta.value_or(0.0))));
    while (depth >= 1) {
        try {
            return gate_fidelity(buffer(tensor, limit.axis, depth), theta).fidelity;
        } catch (const NullOutcomeError &) {
            depth /= 2;
        }
    }
    return kNaN;
}

template <typename Task>
void parallel_for(std::size_t count, int threads, Task task) {
    const std::size_t workers = std::clamp<std::size_t>(threads < 1 ? 1 : threads, 1, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (std::size_t k = next++; k < count && !failed; k = next++) {
            try {
                task(k);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto &t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

struct Cell {
    double theta, phi;
    int m;
};

std::vector<Cell> cells(const SweepConfig &config) {
    std::vector<Cell> out;
    for (double t : config.thetas) {
        for (double p : config.phis) {
            for (int m : config.m_list) out.push_back({t, p, m});
        }
    }
    std::sort(out.begin(), out.end(), [](const Cell &a, const Cell &b) {
        return std::make_tuple(a.theta, a.phi, sort_key(a.m)) < std::make_tuple(b.theta, b.phi, sort_key(b.m));
    });
    return out;
}

nlohmann::json length_json(const Length &l) {
    return l.is_finite() ? nlohmann::json(l.value()) : nlohmann::json("inf");
}

nlohmann::json number_json(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

FactorizedTensor model_tensor(const SweepConfig &config, double theta, double phi) {
    if (config.model == "aklt") return aklt_factorized();
    // Grid endpoints such as phi = 2 pi are deliberate; wrap them quietly.
    return toy_tensor(wrap_params({theta, phi}));
}

RenormResult renormalize(const FactorizedTensor &tensor, Axis axis, int m) {
    return m == kInfiniteDepth ? flow_limit(tensor, axis) : buffer(tensor, axis, m);
}

SweepRow evaluate_cell(const SweepConfig &config, double theta, double phi, int m) {
    const FactorizedTensor tensor = model_tensor(config, theta, phi);
    SweepRow row;
    row.theta = theta;
    row.phi = phi;
    row.m = m;
    row.zeta_z = axis_zeta(tensor, Axis::z);
    row.xi = channel_fixed_points(tensor.parent()).xi;

    const RenormResult along_z = renormalize(tensor, Axis::z, m);
    const RenormResult along_x = renormalize(tensor, Axis::x, m);
    const RenormResult &chosen = config.axis == Axis::z ? along_z : along_x;
    row.fidelity = m == kInfiniteDepth ? limit_fidelity(tensor, chosen, config.theta_gate)
                                       : fidelity_or_nan(chosen, config.theta_gate);
    row.o_z = string_order_renormalized(along_z).limit;
    row.o_x = string_order_renormalized(along_x).limit;
    row.xi_tilde = chosen.xi_tilde;
    row.degenerate = chosen.xi_tilde.is_infinite();
    return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig &config, int threads) {
    validate(config);
    const std::vector<Cell> grid = cells(config);
    std::vector<SweepRow> rows(grid.size());
    parallel_for(grid.size(), threads,
                 [&](std::size_t k) { rows[k] = evaluate_cell(config, grid[k].theta, grid[k].phi, grid[k].m); });
    return rows;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::vector<ProtocolSummary> run_protocol(const SweepConfig &config, int threads) {
    validate(config);
    std::vector<Cell> grid = cells(config);
    for (const auto &c : grid) {
        if (c.m == kInfiniteDepth) throw ConfigError("m", "the protocol needs finite depths");
    }
    std::vector<ProtocolSummary> out(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t k) {
        const Cell &c = grid[k];
        const FactorizedTensor tensor = model_tensor(config, c.theta, c.phi);
        ProtocolSummary s;
        s.theta = c.theta;
        s.phi = c.phi;
        s.m = c.m;
        s.runs = config.runs;
        const ProtocolSimulator simulator(tensor);
        const std::uint64_t base = splitmix64(config.seed);
        for (long long r = 0; r < config.runs; ++r) {
            const ProtocolTrace trace =
                simulator.run(config.axis, c.m, config.theta_gate, splitmix64(base + static_cast<std::uint64_t>(r)));
            s.attempts += trace.attempts;
            s.successes += trace.succeeded ? 1 : 0;
        }
        s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.attempts);
        s.p_succ = postselect_probability(tensor, config.axis, c.m);
        s.sigma = std::sqrt(s.p_succ * (1.0 - s.p_succ) / static_cast<double>(s.attempts));
        out[k] = s;
    });
    return out;
}

nlohmann::json point_report(const SweepConfig &config, double theta, double phi, int m) {
    const FactorizedTensor tensor = model_tensor(config, theta, phi);
    const CanonicalData canonical = canonicalize(tensor.parent(), DegeneracyPolicy::Strict);
    const SweepRow row = evaluate_cell(config, theta, phi, m);
    const Axis axis = config.axis;
    const JordanSpectrum spectrum =
        junk_spectrum(tensor.junk(index(axis)), tensor.junk_symmetry(generator_for(axis)));
    const complex lambda1 = spectrum.eigenvalues.front();

    nlohmann::json j = rows_to_json({row}).front();
    j["model"] = config.model;
    j["axis"] = std::string(1, axis_name(axis));
    j["theta_gate"] = config.theta_gate;
    j["phase"] = classify_d2_phase(canonical.tensor).value == Phase::D2_SPTO ? "D2_SPTO" : "Trivial";
    j["s4_residual"] = verify_s4_invariance(tensor.parent()).max_residual;
    j["lambda1"] = {lambda1.real(), lambda1.imag()};
    j["zeta_axis"] = length_json(spectrum.zeta);
    if (m != kInfiniteDepth) {
        j["p_succ"] = postselect_probability(tensor, axis, m);
    }
    if (spectrum.zeta.is_finite() && std::abs(lambda1) > 0.0 && std::abs(lambda1) <= 1.0) {
        j["overhead_estimate_eps_1e-3"] = overhead_estimate(spectrum.zeta.value(), lambda1, 1e-3);
    }
    return j;
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return fmt::format("{:.17g}", value);
}

std::string format_length(const Length &value) {
    return value.is_finite() ? format_number(value.value()) : "inf";
}

std::string format_depth(int m) {
    return m == kInfiniteDepth ? "inf" : std::to_string(m);
}

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows, const std::string &meta) {
    if (!meta.empty()) out << "# " << meta << '\n';
    out << kSweepHeader << '\n';
    for (const auto &r : rows) {
        out << format_number(r.theta) << ',' << format_number(r.phi) << ',' << format_depth(r.m) << ','
            << format_number(r.fidelity) << ',' << format_number(r.o_z) << ',' << format_number(r.o_x) << ','
            << format_length(r.zeta_z) << ',' << format_length(r.xi) << ',' << format_length(r.xi_tilde) << ','
            << (r.degenerate ? 1 : 0) << '\n';
    }
}

nlohmann::json rows_to_json(const std::vector<SweepRow> &rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &r : rows) {
        out.push_back({{"theta", r.theta},
                       {"phi", r.phi},
                       {"m", r.m == kInfiniteDepth ? nlohmann::json("inf") : nlohmann::json(r.m)},
                       {"fidelity", number_json(r.fidelity)},
                       {"O_z", r.o_z},
                       {"O_x", r.o_x},
                       {"zeta_z", length_json(r.zeta_z)},
                       {"xi", length_json(r.xi)},
                       {"xi_tilde", length_json(r.xi_tilde)},
                       {"degenerate", r.degenerate ? 1 : 0}});
    }
    return out;
}

void write_protocol_csv(std::ostream &out, const std::vector<ProtocolSummary> &rows, const std::string &meta) {
    if (!meta.empty()) out << "# " << meta << '\n';
    out << "theta,phi,m,runs,successes,attempts,success_rate,p_succ,sigma\n";
    for (const auto &r : rows) {
        out << format_number(r.theta) << ',' << format_number(r.phi) << ',' << r.m << ',' << r.runs << ','
            << r.successes << ',' << r.attempts << ',' << format_number(r.success_rate) << ','
            << format_number(r.p_succ) << ',' << format_number(r.sigma) << '\n';
    }
}

nlohmann::json protocol_to_json(const std::vector<ProtocolSummary> &rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &r : rows) {
        out.push_back({{"theta", r.theta},
                       {"phi", r.phi},
                       {"m", r.m},
                       {"runs", r.runs},
                       {"successes", r.successes},
                       {"attempts", r.attempts},
                       {"success_rate", r.success_rate},
                       {"p_succ", r.p_succ},
                       {"sigma", r.sigma}});
    }
    return out;
}

}  // namespace sptmqc::tools
