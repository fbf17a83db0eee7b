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

#include "sptmqc/mqc.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace sptmqc {

namespace {

// Parent matrices rescaled to unit spectral radius with their fixed points.
struct Chain {
    std::vector<Matrix> a;
    Matrix left;
    Matrix right;
};

Chain make_chain(const MPSTensor &tensor) {
    const FixedPoints fp = channel_fixed_points(tensor);
    Chain c;
    const double s = 1.0 / std::sqrt(fp.spectral_radius);
    for (const auto &m : tensor.matrices()) c.a.push_back(s * m);
    c.left = fp.left;
    c.right = fp.right;
    return c;
}

Matrix apply_channel(const Chain &c, const Matrix &x) {
    Matrix out = Matrix::Zero(x.rows(), x.cols());
    for (const auto &a : c.a) out += a * x * a.adjoint();
    return out;
}

Matrix apply_adjoint_channel(const std::vector<Matrix> &matrices, const Matrix &x) {
    Matrix out = Matrix::Zero(x.rows(), x.cols());
    for (const auto &a : matrices) out += a.adjoint() * x * a;
    return out;
}

void check_axis(Axis axis) {
    if (axis != Axis::x && axis != Axis::z) {
        throw DomainError("rotations are defined about the x or z axis only");
    }
}

double real_trace(const Matrix &m) {
    return m.trace().real();
}

// tr(x * y) without forming the product.
double trace_product(const Matrix &x, const Matrix &y) {
    return (x.transpose().cwiseProduct(y)).sum().real();
}

// Samples an index with weights tr(env A_i rest A_i^dag); `kets` holds
// A_i rest A_i^dag for each i.
int sample(const std::array<Matrix, 3> &kets, const Matrix &env, std::mt19937_64 &rng) {
    double w[3];
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        w[i] = std::max(0.0, trace_product(env, kets[i]));
        total += w[i];
    }
    double r = std::uniform_real_distribution<double>(0.0, total)(rng);
    for (int i = 0; i < 2; ++i) {
        if (r < w[i]) return i;
        r -= w[i];
    }
    return 2;
}

std::array<Matrix, 3> kets(const std::vector<Matrix> &a, const Matrix &rest) {
    return {a[0] * rest * a[0].adjoint(), a[1] * rest * a[1].adjoint(), a[2] * rest * a[2].adjoint()};
}

Matrix advance(const Matrix &a, const Matrix &env) {
    Matrix next = a.adjoint() * env * a;
    return next / real_trace(next);
}

}  // namespace

Vector rotation_coefficients(double theta, Axis axis) {
    check_axis(axis);
    Vector c = Vector::Zero(3);
    const int first = axis == Axis::z ? 0 : 1;
    c(first) = std::cos(theta / 2);
    c(first + 1) = -std::sin(theta / 2);
    return c;
}

MeasurementOutcome measurement_outcome(const MPSTensor &tensor, const Vector &coefficients) {
    if (coefficients.size() != tensor.physical_dim()) {
        throw ShapeError("outcome has " + std::to_string(coefficients.size()) + " coefficients for physical dimension " +
                         std::to_string(tensor.physical_dim()));
    }
    const double norm = coefficients.norm();
    if (norm == 0.0) throw DomainError("outcome coefficients vanish");
    MeasurementOutcome out{coefficients / norm, Matrix::Zero(tensor.bond_dim(), tensor.bond_dim())};
    for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
        out.op += std::conj(out.coefficients(i)) * tensor.matrix(static_cast<std::size_t>(i));
    }
    return out;
}

MeasurementOutcome rotation_outcome(const MPSTensor &tensor, double theta, Axis axis) {
    return measurement_outcome(tensor, rotation_coefficients(theta, axis));
}

Matrix target_operation(double theta, Axis axis) {
    check_axis(axis);
    const int byproduct = axis == Axis::z ? 0 : 1;
    const Matrix generator = linalg::pauli(axis == Axis::z ? 2 : 0);
    const Matrix rotation = std::cos(theta / 2) * Matrix::Identity(2, 2) - complex(0, std::sin(theta / 2)) * generator;
    return linalg::pauli(byproduct) * rotation;
}

Matrix default_protected_state(Axis axis) {
    check_axis(axis);
    return 0.5 * (Matrix::Identity(2, 2) + linalg::pauli(axis == Axis::z ? 0 : 1));
}

FidelityReport gate_fidelity(const RenormResult &result, double theta, std::optional<Matrix> rho_p,
                             std::optional<Matrix> rho_j) {
    const Axis axis = result.axis;
    const Eigen::Index jdim = result.tensor.junk_dim();
    FidelityReport report;
    report.theta = theta;
    report.axis = axis;
    report.m = result.m;
    report.rho_protected = rho_p ? *rho_p : default_protected_state(axis);
    report.rho_junk = rho_j ? *rho_j : Matrix(result.pi_projector / result.pi_projector.trace());
    if (report.rho_protected.rows() != 2 || report.rho_protected.cols() != 2) {
        throw ShapeError("protected state must be 2x2");
    }
    if (report.rho_junk.rows() != jdim || report.rho_junk.cols() != jdim) {
        throw ShapeError("junk state dimension does not match the junk space");
    }
    const Vector psi = rotation_coefficients(theta, axis);
    Matrix protected_op = Matrix::Zero(2, 2);
    for (int mu = 0; mu < 3; ++mu) protected_op += std::conj(psi(mu)) * linalg::pauli(mu);
    report.effective_protected_op = protected_op;

    const Matrix a = measurement_outcome(result.tensor.parent(), psi).op;
    const Matrix rho = linalg::kron(report.rho_protected, report.rho_junk);
    const Matrix out = a * rho * a.adjoint();
    const double weight = real_trace(out);
    if (weight < 1e-14) {
        throw NullOutcomeError("rotation outcome has vanishing weight on the input state");
    }
    const Matrix reduced = linalg::trace_inner(out / weight, 2);
    const Matrix t = target_operation(theta, axis);
    report.fidelity = real_trace(reduced * t * report.rho_protected * t.adjoint());
    return report;
}

double log_postselect_probability(const FactorizedTensor &tensor, Axis axis, int m) {
    check_axis(axis);
    if (m < 0) throw DomainError("buffering depth must be non-negative");
    if (m == 0) return 0.0;
    const Chain c = make_chain(tensor.parent());
    double log_scale = 0.0;
    const Matrix b = linalg::scaled_power(c.a[static_cast<std::size_t>(index(axis))], m, &log_scale);
    if (!std::isfinite(log_scale)) return -std::numeric_limits<double>::infinity();
    const Matrix inner = apply_channel(c, b * c.right * b.adjoint());
    const double value = real_trace(c.left * b * inner * b.adjoint()) / real_trace(c.left * c.right);
    if (value <= 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(value) + 4.0 * log_scale;
}

double postselect_probability(const FactorizedTensor &tensor, Axis axis, int m) {
    return std::exp(log_postselect_probability(tensor, axis, m));
}

std::vector<double> single_site_probabilities(const MPSTensor &tensor) {
    const Chain c = make_chain(tensor);
    const double norm = real_trace(c.left * c.right);
    std::vector<double> out;
    for (const auto &a : c.a) out.push_back(real_trace(c.left * a * c.right * a.adjoint()) / norm);
    return out;
}

double overhead_estimate(double zeta, complex lambda1, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
    const double modulus = std::abs(lambda1);
    if (!(modulus > 0.0 && modulus <= 1.0)) throw DomainError("|lambda1| must lie in (0, 1]");
    if (!std::isfinite(zeta) || zeta < 0.0) throw DomainError("zeta must be finite and non-negative");
    const double exponent = 4.0 * zeta * std::log(1.0 / modulus);
    return zeta * std::pow(1.0 / epsilon, exponent) * std::log(1.0 / epsilon);
}

ProtocolTrace simulate_protocol(const FactorizedTensor &tensor, Axis axis, int m, double theta, std::uint64_t seed,
                                long long max_attempts) {
    return ProtocolSimulator(tensor).run(axis, m, theta, seed, max_attempts);
}

ProtocolSimulator::ProtocolSimulator(const FactorizedTensor &tensor) {
    Chain c = make_chain(tensor.parent());
    if (c.a.size() != 3) throw ShapeError("the protocol needs a spin-1 tensor");
    a_ = std::move(c.a);
    left_ = c.left / real_trace(c.left * c.right);
    right_ = c.right;
    bulk_ = kets(a_, right_);
}

ProtocolTrace ProtocolSimulator::run(Axis axis, int m, double theta, std::uint64_t seed, long long max_attempts) const {
    check_axis(axis);
    if (m < 0) throw DomainError("buffering depth must be non-negative");
    const int target = index(axis);
    const char labels[3] = {'x', 'y', 'z'};
    std::mt19937_64 rng(seed);

    ProtocolTrace trace;
    trace.rng_seed = seed;
    trace.axis = axis;
    trace.m = m;
    trace.theta = theta;
    const auto &bulk = bulk_;
    Matrix env = left_;
    while (trace.attempts < max_attempts) {
        ++trace.attempts;
        trace.sites_consumed += 2LL * m + 1;
        bool ok = true;
        std::vector<int> outcomes;
        for (int k = 0; k < m; ++k) {
            const int i = sample(bulk, env, rng);
            outcomes.push_back(i);
            ok = ok && i == target;
            env = advance(a_[i], env);
        }
        // The computational site is still unmeasured: trace it out while the
        // right buffers are sampled.
        Matrix right_env = apply_adjoint_channel(a_, env);
        std::vector<int> right;
        for (int k = 0; k < m; ++k) {
            const int i = sample(bulk, right_env, rng);
            right.push_back(i);
            ok = ok && i == target;
            right_env = advance(a_[i], right_env);
        }
        for (int i : outcomes) trace.byproducts.push_back(labels[i]);
        if (ok) {
            trace.rotation_position = trace.byproducts.size();
            for (int i : right) trace.byproducts.push_back(labels[i]);
            trace.succeeded = true;
            return trace;
        }
        Matrix rest = right_;
        for (auto it = right.rbegin(); it != right.rend(); ++it) {
            rest = a_[*it] * rest * a_[*it].adjoint();
        }
        const int comp = sample(kets(a_, rest), env, rng);
        trace.byproducts.push_back(labels[comp]);
        env = advance(a_[comp], env);
        for (int i : right) {
            trace.byproducts.push_back(labels[i]);
            env = advance(a_[i], env);
        }
    }
    return trace;
}

Matrix net_protected_operator(const ProtocolTrace &trace) {
    Matrix out = Matrix::Identity(2, 2);
    for (std::size_t k = 0; k <= trace.byproducts.size(); ++k) {
        if (trace.succeeded && k == trace.rotation_position) {
            out = out * target_operation(trace.theta, trace.axis);
        }
        if (k < trace.byproducts.size()) {
            out = out * linalg::pauli(trace.byproducts[k] - 'x');
        }
    }
    return out;
}

}  // namespace sptmqc
