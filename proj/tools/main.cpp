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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>

#include "config.hpp"
#include "sptmqc/errors.hpp"
#include "sptmqc/toymodel.hpp"
#include "sweep.hpp"

namespace {

using namespace sptmqc;
using namespace sptmqc::tools;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;

struct Options {
    std::string config_path;
    std::string out;
    std::string format;
    std::optional<std::uint64_t> seed;
    int threads = 0;
    bool no_meta = false;
    std::vector<std::string> theta;
    std::vector<std::string> phi;
    std::vector<std::string> m;
    std::string mode;
    std::string model;
    std::string axis;
    std::string theta_gate;
    std::optional<long long> runs;
};

int default_threads() {
    if (const char *env = std::getenv("SPTMQC_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception &) {
        }
        throw ConfigError("SPTMQC_THREADS", "must be a positive integer");
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<double> angles(const std::vector<std::string> &texts, const std::string &field) {
    std::vector<double> out;
    for (const auto &t : texts) out.push_back(parse_angle(t, field));
    return out;
}

int depth(const std::string &text) {
    if (text == "inf" || text == "-1") return kInfiniteDepth;
    try {
        std::size_t used = 0;
        const int m = std::stoi(text, &used);
        if (used == text.size() && m >= 0) return m;
    } catch (const std::exception &) {
    }
    throw ConfigError("--m", "depth must be a non-negative integer or 'inf'");
}

SweepConfig resolve(const Options &o, SweepConfig base) {
    SweepConfig c = o.config_path.empty() ? std::move(base) : load_config(o.config_path);
    if (!o.mode.empty()) c.mode = parse_mode(o.mode);
    if (!o.model.empty()) {
        if (o.model != "toy" && o.model != "aklt") throw ConfigError("--model", "must be toy or aklt");
        c.model = o.model;
    }
    if (!o.axis.empty()) {
        if (o.axis != "x" && o.axis != "z") throw ConfigError("--axis", "must be x or z");
        c.axis = parse_axis(o.axis);
    }
    if (!o.theta.empty()) c.thetas = angles(o.theta, "--theta");
    if (!o.phi.empty()) c.phis = angles(o.phi, "--phi");
    if (!o.m.empty()) {
        c.m_list.clear();
        for (const auto &t : o.m) c.m_list.push_back(depth(t));
    }
    if (!o.theta_gate.empty()) c.theta_gate = parse_angle(o.theta_gate, "--theta-gate");
    if (o.seed) c.seed = *o.seed;
    if (o.runs) c.runs = *o.runs;
    if (!o.format.empty()) c.format = parse_format(o.format);
    if (!o.out.empty()) c.output = o.out;
    validate(c);
    return c;
}

std::string meta_line(const std::string &command) {
    const auto now = std::chrono::system_clock::now();
    return fmt::format("sptmqc {} generated {:%Y-%m-%dT%H:%M:%S}Z", command, fmt::gmtime(std::chrono::system_clock::to_time_t(now)));
}

// Writes through `emit` to the configured file or stdout.
template <typename Emit>
void with_output(const std::optional<std::string> &path, Emit emit) {
    if (!path) {
        emit(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(*path);
    if (!file) throw std::runtime_error("cannot open output file '" + *path + "'");
    emit(file);
    file.flush();
    if (!file) throw std::runtime_error("failed writing output file '" + *path + "'");
}

void emit_rows(const SweepConfig &c, const std::vector<SweepRow> &rows, const std::string &meta) {
    with_output(c.output, [&](std::ostream &out) {
        if (c.format == Format::csv) {
            write_csv(out, rows, meta);
        } else {
            nlohmann::json doc = {{"columns", kSweepHeader}, {"rows", rows_to_json(rows)}};
            if (!meta.empty()) doc["meta"] = meta;
            out << doc.dump(2) << '\n';
        }
    });
}

SweepConfig figure2_config() {
    SweepConfig c;
    c.thetas = {std::numbers::pi / 2};
    c.phis = linspace(0.0, 2 * std::numbers::pi, 101, true);
    c.m_list = {0, 2, kInfiniteDepth};
    return c;
}

SweepConfig figure3_config() {
    SweepConfig c;
    c.thetas = linspace(0.0, std::numbers::pi, 101, true);
    c.thetas.push_back(critical_theta());
    c.phis = {0.0};
    c.m_list = {0, 2, kInfiniteDepth};
    return c;
}

void add_common(CLI::App *cmd, Options &o) {
    cmd->add_option("--config", o.config_path, "TOML or JSON configuration file");
    cmd->add_option("--out", o.out, "output path (stdout if omitted)");
    cmd->add_option("--format", o.format, "csv or json");
    cmd->add_option("--threads", o.threads, "worker threads (default: $SPTMQC_THREADS or all cores)");
    cmd->add_flag("--no-meta", o.no_meta, "omit the timestamp line");
}

void add_point_options(CLI::App *cmd, Options &o) {
    cmd->add_option("--theta", o.theta, "theta value(s); accepts pi/2, theta_c, ...");
    cmd->add_option("--phi", o.phi, "phi value(s)");
    cmd->add_option("--m", o.m, "buffering depth(s); 'inf' for the limit");
    cmd->add_option("--model", o.model, "toy or aklt");
    cmd->add_option("--axis", o.axis, "buffering and rotation axis, x or z");
    cmd->add_option("--theta-gate", o.theta_gate, "rotation angle of the gate");
}

int run(int argc, char **argv) {
    CLI::App app{"Measurement-based quantum computation on symmetry-protected MPS resources"};
    app.require_subcommand(1);
    Options o;

    auto *sweep = app.add_subcommand("sweep", "evaluate a (theta, phi, m) grid");
    add_common(sweep, o);
    add_point_options(sweep, o);
    sweep->add_option("--mode", o.mode, "fidelity, orderparam, lengths or protocol");
    sweep->add_option("--seed", o.seed, "seed for protocol mode");
    sweep->add_option("--runs", o.runs, "runs per cell in protocol mode");

    auto *point = app.add_subcommand("point", "analyse one parameter point (JSON)");
    add_common(point, o);
    add_point_options(point, o);

    auto *protocol = app.add_subcommand("protocol", "simulate the postselected buffering protocol");
    add_common(protocol, o);
    add_point_options(protocol, o);
    protocol->add_option("--seed", o.seed, "base seed");
    protocol->add_option("--runs", o.runs, "number of independent runs");

    auto *figures = app.add_subcommand("figures", "write the built-in fig2.csv and fig3.csv sweeps");
    std::string figure_dir = ".";
    figures->add_option("--out", figure_dir, "output directory");
    figures->add_option("--threads", o.threads, "worker threads");
    figures->add_flag("--no-meta", o.no_meta, "omit the timestamp line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        const int threads = o.threads > 0 ? o.threads : default_threads();
        if (sweep->parsed()) {
            const SweepConfig c = resolve(o, SweepConfig{});
            const std::string meta = o.no_meta ? "" : meta_line("sweep");
            if (c.mode == Mode::protocol) {
                const auto rows = run_protocol(c, threads);
                with_output(c.output, [&](std::ostream &out) {
                    if (c.format == Format::csv) {
                        write_protocol_csv(out, rows, meta);
                    } else {
                        out << protocol_to_json(rows).dump(2) << '\n';
                    }
                });
            } else if (c.mode == Mode::point) {
                throw ConfigError("mode", "use the point subcommand for single points");
            } else {
                emit_rows(c, run_sweep(c, threads), meta);
            }
        } else if (point->parsed()) {
            SweepConfig base;
            base.mode = Mode::point;
            const SweepConfig c = resolve(o, base);
            if (c.thetas.size() != 1 || c.phis.size() != 1 || c.m_list.size() != 1) {
                throw ConfigError("point", "exactly one theta, phi and m are required");
            }
            try {
                const auto report = point_report(c, c.thetas[0], c.phis[0], c.m_list[0]);
                with_output(c.output, [&](std::ostream &out) { out << report.dump(2) << '\n'; });
            } catch (const DegeneracyError &e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitDegenerate;
            }
        } else if (protocol->parsed()) {
            SweepConfig base;
            base.mode = Mode::protocol;
            base.model = "aklt";
            base.m_list = {1};
            const SweepConfig c = resolve(o, base);
            const auto rows = run_protocol(c, threads);
            with_output(c.output, [&](std::ostream &out) {
                if (c.format == Format::csv) {
                    write_protocol_csv(out, rows, o.no_meta ? "" : meta_line("protocol"));
                } else {
                    nlohmann::json doc = rows.size() == 1 ? protocol_to_json(rows).front() : protocol_to_json(rows);
                    if (rows.size() == 1) {
                        doc["model"] = c.model;
                        doc["seed"] = c.seed;
                    }
                    out << doc.dump(2) << '\n';
                }
            });
        } else if (figures->parsed()) {
            std::filesystem::create_directories(figure_dir);
            for (auto [name, config] : {std::pair{"fig2.csv", figure2_config()}, std::pair{"fig3.csv", figure3_config()}}) {
                config.output = (std::filesystem::path(figure_dir) / name).string();
                emit_rows(config, run_sweep(config, threads), o.no_meta ? "" : meta_line("figures"));
            }
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    return run(argc, argv);
}
