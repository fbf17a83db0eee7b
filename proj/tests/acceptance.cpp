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

// Acceptance suite: one PASS/FAIL line per headline criterion, each with a
// pinned tolerance and a wall-clock budget. Exit status is non-zero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "config.hpp"
#include "oracles.hpp"
#include "sptmqc/sptmqc.hpp"
#include "sweep.hpp"

using namespace sptmqc;
using namespace sptmqc::tools;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kGrid = 21;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Accumulates sub-checks; the first few failures are kept for the report.
class Checks {
  public:
    void expect(bool ok, const std::string &what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (failed_ <= 3) notes_.push_back(what);
    }
    void note(const std::string &text) { notes_.push_back(text); }
    Outcome outcome() const {
        std::string detail = fmt::format("{}/{} checks", total_ - failed_, total_);
        for (const auto &n : notes_) detail += "; " + n;
        return {failed_ == 0, detail};
    }

  private:
    int total_ = 0;
    int failed_ = 0;
    std::vector<std::string> notes_;
};

std::vector<double> grid_thetas() { return linspace(0.0, kPi, kGrid, true); }
std::vector<double> grid_phis() { return linspace(0.0, 2 * kPi, kGrid, true); }

Length axis_zeta(const FactorizedTensor &t) { return junk_spectrum(t.junk(2), t.junk_symmetry(Generator::RotZ)).zeta; }

double fit_slope(const std::vector<double> &x, const std::vector<double> &y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double median(std::vector<double> v) {
    if (v.empty()) return NAN;
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

Outcome aklt_exactness() {
    Checks c;
    const RenormResult r = buffer(aklt_factorized(), Axis::z, 0);
    for (double theta : {0.0, kPi / 8, kPi / 4, kPi / 2, kPi}) {
        const double f = gate_fidelity(r, theta).fidelity;
        c.expect(std::abs(f - 1.0) <= 1e-12, fmt::format("F(Theta={:.4f}) = {:.17g}", theta, f));
    }
    const double order = string_order_bare(canonicalize(aklt()).tensor, Axis::z).limit;
    c.expect(std::abs(order - 0.5) <= 1e-10, fmt::format("O_z = {:.17g}", order));
    return c.outcome();
}

Outcome zeta_closed_form() {
    Checks c;
    int divergent = 0;
    for (double theta : grid_thetas()) {
        for (double phi : grid_phis()) {
            const FactorizedTensor t = toy_tensor(wrap_params({theta, phi}));
            const JordanSpectrum s = junk_spectrum(t.junk(2), t.junk_symmetry(Generator::RotZ));
            const auto want = oracle::toy_az_moduli_squared(theta, phi);
            const double hi = std::max(want[0], want[1]), lo = std::min(want[0], want[1]);
            const double got_hi = std::norm(s.eigenvalues.at(0));
            const double got_lo = std::norm(s.eigenvalues.at(1));
            c.expect(std::abs(got_hi - hi) <= 1e-12 && std::abs(got_lo - lo) <= 1e-12,
                     fmt::format("moduli at ({:.4f}, {:.4f})", theta, phi));
            const bool expect_tie = std::abs(std::cos(phi)) < 1e-8 || std::abs(std::sin(theta)) < 1e-8;
            c.expect(s.zeta.is_infinite() == expect_tie, fmt::format("zeta sentinel at ({:.4f}, {:.4f})", theta, phi));
            divergent += s.zeta.is_infinite() ? 1 : 0;
        }
    }
    c.note(fmt::format("{} divergent cells", divergent));
    return c.outcome();
}

Outcome fidelity_convergence() {
    Checks c;
    std::vector<double> scaled_rates;
    int fitted = 0, within = 0, skipped = 0, instant = 0;
    double worst_fidelity = 1.0;
    for (double theta : grid_thetas()) {
        for (double phi : grid_phis()) {
            const FactorizedTensor t = toy_tensor(wrap_params({theta, phi}));
            const Length zeta = axis_zeta(t);
            if (zeta.is_infinite() || fixed_point(t, Axis::z).degenerate) {
                ++skipped;
                continue;
            }
            const double z = zeta.value();
            const int m_top = std::max(1, static_cast<int>(std::ceil(40.0 * z)));
            const double f_top = gate_fidelity(buffer(t, Axis::z, m_top), kPi / 2).fidelity;
            worst_fidelity = std::min(worst_fidelity, f_top);
            c.expect(f_top > 0.999, fmt::format("F(m={}) = {:.6g} at ({:.4f}, {:.4f})", m_top, f_top, theta, phi));
            if (z == 0.0) {
                ++instant;  // rank-one a_z: the flow reaches its limit in one step
                continue;
            }
            // 1 - F sampled on a ladder of depths spaced by zeta.
            std::vector<double> ms, logs;
            int last = -1;
            for (int k = 0; k <= 16; ++k) {
                const int m = static_cast<int>(std::lround(k * z));
                if (m == last) continue;
                last = m;
                const double infidelity = 1.0 - gate_fidelity(buffer(t, Axis::z, m), kPi / 2).fidelity;
                if (infidelity <= 1e-12) break;
                ms.push_back(m);
                logs.push_back(std::log(infidelity));
            }
            if (ms.size() < 3) {
                ++instant;
                continue;
            }
            const double scaled = -fit_slope(ms, logs) * z;
            scaled_rates.push_back(scaled);
            ++fitted;
            const bool ok = std::abs(scaled - 1.0) <= 0.15;
            within += ok ? 1 : 0;
            c.expect(ok, fmt::format("rate*zeta = {:.4f} at ({:.4f}, {:.4f})", scaled, theta, phi));
        }
    }
    c.note(fmt::format("fitted {} points, {} within 15% of 1/zeta, median rate*zeta {:.4f}; min F(40 zeta) {:.6f}; "
                       "{} excluded, {} without a resolvable decay",
                       fitted, within, median(scaled_rates), worst_fidelity, skipped, instant));
    return c.outcome();
}

Outcome order_fidelity_equivalence() {
    Checks c;
    int excluded = 0, witnesses = 0;
    for (double theta : grid_thetas()) {
        for (double phi : grid_phis()) {
            const Theorem2Report r = theorem2_check(toy_tensor(wrap_params({theta, phi})));
            if (r.excluded) {
                ++excluded;
                continue;
            }
            c.expect(r.consistent, fmt::format("inconsistent at ({:.4f}, {:.4f}): F={:.6g} O_x={:.6g} O_z={:.6g}",
                                               theta, phi, r.f_limit, r.o_x, r.o_z));
            if (std::abs(std::cos(phi)) < 1e-8 && r.stalled && r.f_limit < 1.0 - 1e-6 && r.o_z < 0.5 - 1e-6) {
                ++witnesses;
            }
        }
    }
    c.expect(witnesses >= 1, "no stalled witness on the cos(phi) = 0 line");
    c.note(fmt::format("{} excluded, {} stalled witnesses", excluded, witnesses));
    return c.outcome();
}

Outcome critical_angle() {
    Checks c;
    const FactorizedTensor t = toy_tensor({critical_theta(), 0.0});
    const RenormResult limit = fixed_point(t, Axis::z);
    const double pair = std::max(linalg::max_abs(limit.tensor.junk(0)), linalg::max_abs(limit.tensor.junk(1)));
    c.expect(pair <= 1e-10, fmt::format("limit rotated pair {:.3g}", pair));
    std::vector<double> xis;
    for (int m : {2, 4, 6, 8}) xis.push_back(xi_tilde(buffer(t, Axis::z, m)).value_or(INFINITY));
    bool increasing = std::all_of(xis.begin(), xis.end(), [](double x) { return std::isfinite(x); });
    for (std::size_t k = 1; k < xis.size(); ++k) increasing = increasing && xis[k] > xis[k - 1];
    c.expect(increasing, fmt::format("xi~(2,4,6,8) = {:.3g}, {:.3g}, {:.3g}, {:.3g}", xis[0], xis[1], xis[2], xis[3]));
    const double order = string_order_renormalized(limit).limit;
    c.expect(std::abs(order - 1.0) <= 1e-8, fmt::format("O_z = {:.17g}", order));
    const double oracle = std::pow(std::cos(kPi / 2), 2);
    const double f = gate_fidelity(buffer(t, Axis::z, 10), kPi / 2).fidelity;
    c.expect(f < 0.01 && std::abs(f - oracle) < 0.01, fmt::format("F(m=10) = {:.3g}", f));
    return c.outcome();
}

Outcome protocol_statistics() {
    Checks c;
    SweepConfig config;
    config.mode = Mode::protocol;
    config.model = "aklt";
    config.m_list = {1};
    config.seed = 42;
    config.runs = 100000;
    const ProtocolSummary s = run_protocol(config, 1).front();
    const double p = 1.0 / 9.0;
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(s.attempts));
    c.expect(std::abs(s.success_rate - p) <= 3 * sigma,
             fmt::format("rate {:.5f} vs 1/9, {:.2f} sigma", s.success_rate, (s.success_rate - p) / sigma));
    c.expect(std::abs(s.p_succ - p) <= 1e-12, "p_succ differs from 1/9");
    for (auto [theta, phi] : {std::pair{kPi / 2, kPi / 4}, std::pair{kPi / 3, 0.0}}) {
        const FactorizedTensor t = toy_tensor({theta, phi});
        const int start = static_cast<int>(std::ceil(10.0 * axis_zeta(t).value()));
        std::vector<double> ms, logs;
        for (int m = start; m <= start + 10; ++m) {
            ms.push_back(m);
            logs.push_back(log_postselect_probability(t, Axis::z, m));
        }
        const double expected = 4.0 * std::log(std::sqrt(oracle::toy_az_moduli_squared(theta, phi)[0]));
        const double slope = fit_slope(ms, logs);
        c.expect(std::abs(slope / expected - 1.0) <= 0.05,
                 fmt::format("slope {:.6f} vs {:.6f} at ({:.4f}, {:.4f})", slope, expected, theta, phi));
    }
    return c.outcome();
}

Outcome oracle_equivalence() {
    Checks c;
    std::vector<MPSTensor> tensors{canonicalize(aklt()).tensor};
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 10; ++k) {
        tensors.push_back(toy_tensor({kPi * (0.02 + 0.96 * unit(rng)), 2 * kPi * unit(rng)}).parent());
    }
    double worst = 0.0;
    for (const MPSTensor &t : tensors) {
        const Matrix left = canonicalize(t, DegeneracyPolicy::Tolerant).left_fixed_point;
        for (Axis axis : {Axis::z, Axis::x}) {
            const StringOrderResult r = string_order_bare(t, axis, 6);
            const Matrix u = spin1_rotation(axis, kPi / 2);
            for (int n = 0; n <= 6; ++n) {
                const double err = std::abs(r.values_by_n[n] - oracle::string_by_enumeration(t.matrices(), left, u, n));
                worst = std::max(worst, err);
                c.expect(err <= 1e-9, fmt::format("n={} error {:.3g}", n, err));
            }
        }
    }
    c.note(fmt::format("max deviation {:.3g}", worst));
    return c.outcome();
}

// Sweep table read back from the CSV text, keyed by column name.
struct Table {
    std::vector<std::map<std::string, double>> rows;
};

Table read_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::vector<std::string> header;
    std::stringstream hs(line);
    for (std::string cell; std::getline(hs, cell, ',');) header.push_back(cell);
    Table t;
    while (std::getline(in, line)) {
        std::stringstream ls(line);
        std::map<std::string, double> row;
        std::size_t k = 0;
        for (std::string cell; std::getline(ls, cell, ',') && k < header.size(); ++k) {
            row[header[k]] = std::strtod(cell.c_str(), nullptr);  // accepts inf and nan
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table sweep_table(const SweepConfig &config) {
    std::ostringstream out;
    write_csv(out, run_sweep(config, 1));
    const std::string text = out.str();
    if (text.rfind(kSweepHeader, 0) != 0) throw std::runtime_error("unexpected CSV header");
    return read_csv(text);
}

Outcome figure_reproduction() {
    Checks c;
    SweepConfig fig2;
    fig2.thetas = {kPi / 2};
    fig2.phis = linspace(0.0, 2 * kPi, 101, true);
    fig2.m_list = {0, 2, kInfiniteDepth};
    const Table row = sweep_table(fig2);
    c.expect(row.rows.size() == 303, "fig2 row count");

    // Fig. 2: features along the equator, theta = pi/2.
    double dip_phi = 0.0, dip_f = 2.0;
    for (const auto &r : row.rows) {
        const double cphi = std::abs(std::cos(r.at("phi")));
        const bool on_locus = cphi < 1e-8;
        if (r.at("m") == 2 && r.at("fidelity") < dip_f) {
            dip_f = r.at("fidelity");
            dip_phi = r.at("phi");
        }
        c.expect(std::isinf(r.at("zeta_z")) == on_locus, fmt::format("fig2 zeta locus at phi={:.4f}", r.at("phi")));
        if (!std::isinf(r.at("m"))) continue;
        if (on_locus) {
            c.expect(r.at("fidelity") < 0.99, "fig2 no fidelity dip at cos(phi)=0");
            c.expect(r.at("O_z") < 0.5 - 1e-6, "fig2 O_z not suppressed at cos(phi)=0");
        } else if (cphi > 0.05) {
            c.expect(r.at("fidelity") > 1.0 - 1e-6, fmt::format("fig2 F={:.6g} at phi={:.4f}", r.at("fidelity"), r.at("phi")));
            c.expect(std::abs(r.at("O_z") - 0.5) < 1e-6, fmt::format("fig2 O_z plateau at phi={:.4f}", r.at("phi")));
            c.expect(std::isfinite(r.at("xi_tilde")), fmt::format("fig2 xi~ finite at phi={:.4f}", r.at("phi")));
        }
    }
    c.expect(std::abs(std::cos(dip_phi)) < 0.1, fmt::format("fig2 m=2 dip at phi={:.4f}", dip_phi));

    // Fig. 3: features along the meridian, phi = 0.
    SweepConfig fig3;
    fig3.thetas = linspace(0.0, kPi, 101, true);
    fig3.thetas.push_back(critical_theta());
    fig3.phis = {0.0};
    fig3.m_list = {0, 2, kInfiniteDepth};
    const Table meridian = sweep_table(fig3);
    c.expect(meridian.rows.size() == 306, "fig3 row count");
    const double tc = critical_theta();
    for (const auto &r : meridian.rows) {
        const double theta = r.at("theta");
        const bool pole = std::abs(std::sin(theta)) < 1e-8;
        const bool south = pole && theta > 1.0;
        const bool critical = std::abs(theta - tc) < 1e-12;
        c.expect(std::isinf(r.at("zeta_z")) == pole, fmt::format("fig3 zeta locus at theta={:.4f}", theta));
        if (!std::isinf(r.at("m"))) continue;
        if (critical) {
            c.expect(r.at("fidelity") < 0.01, fmt::format("fig3 theta_c F={:.3g}", r.at("fidelity")));
            c.expect(std::abs(r.at("O_z") - 1.0) < 1e-8, "fig3 O_z != 1 at theta_c");
            c.expect(std::isinf(r.at("xi_tilde")) && r.at("degenerate") == 1, "fig3 xi~ finite at theta_c");
        } else if (south) {
            c.expect(r.at("fidelity") < 0.99, "fig3 no dip at the South pole");
            c.expect(r.at("O_z") < 0.5 - 1e-6, "fig3 O_z not suppressed at the South pole");
        } else if (!pole) {
            c.expect(r.at("fidelity") > 1.0 - 1e-6, fmt::format("fig3 F={:.6g} at theta={:.4f}", r.at("fidelity"), theta));
            c.expect(std::abs(r.at("O_z") - 0.5) < 1e-6, fmt::format("fig3 O_z={:.6g} at theta={:.4f}", r.at("O_z"), theta));
            c.expect(std::isfinite(r.at("xi_tilde")), fmt::format("fig3 xi~ diverges at theta={:.4f}", theta));
        }
    }
    return c.outcome();
}

struct Criterion {
    const char *name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"aklt-exactness", 1.0, aklt_exactness},
        {"zeta-closed-form", 5.0, zeta_closed_form},
        {"fidelity-convergence", 60.0, fidelity_convergence},
        {"order-fidelity-equivalence", 60.0, order_fidelity_equivalence},
        {"critical-angle-pathology", 5.0, critical_angle},
        {"protocol-statistics", 30.0, protocol_statistics},
        {"string-order-oracle", 30.0, oracle_equivalence},
        {"figure-features", 120.0, figure_reproduction},
    };
    int failures = 0;
    for (const auto &criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= criterion.budget_seconds;
        const bool pass = outcome.pass && in_time;
        failures += pass ? 0 : 1;
        std::cout << fmt::format("{} {} [{:.2f}s / {:.0f}s{}] {}\n", pass ? "PASS" : "FAIL", criterion.name, seconds,
                                 criterion.budget_seconds, in_time ? "" : " over budget", outcome.detail)
                  << std::flush;
    }
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
