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

#ifndef SPTMQC_MQC_HPP
#define SPTMQC_MQC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sptmqc/renorm.hpp"

namespace sptmqc {

/// A single-site measurement outcome and the virtual operator it induces.
struct MeasurementOutcome {
    Vector coefficients;  ///< psi_mu in the (x, y, z) basis, unit norm
    Matrix op;            ///< sum_mu conj(psi_mu) A_mu
};

/// Outcome coefficients implementing a rotation by theta about `axis`.
/// z: (cos, -sin, 0) in the (x, y, z) basis; x: the cyclic relabeling
/// x -> y -> z -> x of the z case, (0, cos, -sin).
Vector rotation_coefficients(double theta, Axis axis);

/// Throws ShapeError if the coefficient count differs from the physical
/// dimension, DomainError for a zero vector. Coefficients are normalized.
MeasurementOutcome measurement_outcome(const MPSTensor &tensor, const Vector &coefficients);

MeasurementOutcome rotation_outcome(const MPSTensor &tensor, double theta, Axis axis);

/// Protected-space operator the rotation outcome should implement, including
/// its known Pauli byproduct: sigma_x exp(-i theta sigma_z / 2) for z and
/// sigma_y exp(-i theta sigma_x / 2) for x.
Matrix target_operation(double theta, Axis axis);

/// The protected input state used by default: the +1 eigenstate of sigma_x
/// for z rotations and of sigma_y for x rotations.
Matrix default_protected_state(Axis axis);

struct FidelityReport {
    double theta = 0.0;
    Axis axis = Axis::z;
    int m = 0;
    double fidelity = 0.0;
    Matrix rho_protected;
    Matrix rho_junk;
    Matrix effective_protected_op;  ///< sum_mu conj(psi_mu) sigma_mu
};

/// Fidelity of the buffered rotation against target_operation. Defaults:
/// rho_p = default_protected_state(axis), rho_j = Pi / tr Pi. Throws
/// NullOutcomeError when the outcome has vanishing probability weight and
/// ShapeError for mismatched states.
FidelityReport gate_fidelity(const RenormResult &result, double theta, std::optional<Matrix> rho_p = std::nullopt,
                             std::optional<Matrix> rho_j = std::nullopt);

/// Born probability that all m sites to the left and all m sites to the
/// right of a traced computational site read out `axis`.
double postselect_probability(const FactorizedTensor &tensor, Axis axis, int m);

/// Natural log of postselect_probability, accurate when the probability
/// underflows.
double log_postselect_probability(const FactorizedTensor &tensor, Axis axis, int m);

/// Born probabilities of the three Pauli-basis outcomes on one site.
std::vector<double> single_site_probabilities(const MPSTensor &tensor);

/// zeta (1/eps)^(4 zeta ln(1/|lambda1|)) ln(1/eps), an order-of-magnitude
/// estimate of the measurement overhead per gate. Throws DomainError for
/// eps outside (0, 1), |lambda1| outside (0, 1] or non-finite zeta.
double overhead_estimate(double zeta, complex lambda1, double epsilon);

struct ProtocolTrace {
    long long attempts = 0;
    std::vector<char> byproducts;  ///< Pauli outcomes x/y/z in site order
    long long sites_consumed = 0;
    bool succeeded = false;
    std::uint64_t rng_seed = 0;
    /// Number of byproducts recorded before the successful computational site.
    std::size_t rotation_position = 0;
    Axis axis = Axis::z;
    int m = 0;
    double theta = 0.0;
};

/// Samples the postselected buffering protocol on an infinite chain: each
/// attempt measures m buffer sites, a computational site and m more buffer
/// sites; on failure the computational site is measured in the Pauli basis
/// and the next attempt uses fresh sites. Gives up after max_attempts.
ProtocolTrace simulate_protocol(const FactorizedTensor &tensor, Axis axis, int m, double theta, std::uint64_t seed,
                                long long max_attempts = 10'000'000);

/// simulate_protocol with the boundary data computed once, for many runs on
/// the same tensor.
class ProtocolSimulator {
  public:
    explicit ProtocolSimulator(const FactorizedTensor &tensor);

    ProtocolTrace run(Axis axis, int m, double theta, std::uint64_t seed, long long max_attempts = 10'000'000) const;

  private:
    std::vector<Matrix> a_;  // rescaled parent matrices
    Matrix left_;
    Matrix right_;
    std::array<Matrix, 3> bulk_;  // A_i R A_i^dag
};

/// Product of the recorded byproducts and the intended rotation in site
/// order, i.e. the protected-space operator the run applied.
Matrix net_protected_operator(const ProtocolTrace &trace);

}  // namespace sptmqc

#endif
