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

#ifndef SPTMQC_MPS_HPP
#define SPTMQC_MPS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sptmqc/errors.hpp"
#include "sptmqc/length.hpp"
#include "sptmqc/linalg.hpp"

namespace sptmqc {

/// Translation-invariant MPS tensor: one D x D matrix per physical basis
/// vector. Immutable once built.
class MPSTensor {
  public:
    /// Throws EmptyError for no matrices, ShapeError for mismatched or
    /// non-square matrices or a label count that differs from d.
    MPSTensor(std::vector<Matrix> matrices, std::vector<std::string> labels);

    const std::vector<Matrix> &matrices() const { return matrices_; }
    const Matrix &matrix(std::size_t i) const { return matrices_[i]; }
    const std::vector<std::string> &labels() const { return labels_; }
    Eigen::Index physical_dim() const { return static_cast<Eigen::Index>(matrices_.size()); }
    Eigen::Index bond_dim() const { return matrices_.front().rows(); }

    /// Throws LabelError for an unknown label.
    std::size_t index_of(const std::string &label) const;

    /// Every matrix multiplied by `factor`.
    MPSTensor scaled(complex factor) const;

  private:
    std::vector<Matrix> matrices_;
    std::vector<std::string> labels_;
};

MPSTensor build_mps(std::vector<Matrix> matrices, std::vector<std::string> labels);

/// The completely positive map X -> sum_{nu,eta} insert(nu,eta) A_eta X A_nu^dag,
/// or X -> sum_i A_i X A_i^dag when no insert is given.
class TransferChannel {
  public:
    /// Throws ShapeError if the insert is not d x d.
    explicit TransferChannel(const MPSTensor &source, std::optional<Matrix> insert = std::nullopt);

    const MPSTensor &source() const { return source_; }
    const std::optional<Matrix> &insert() const { return insert_; }

    /// D^2 x D^2 matrix acting on column-major vectorized operators.
    const Matrix &matrix_form() const { return matrix_; }

    Matrix apply(const Matrix &x) const;
    Matrix apply_adjoint(const Matrix &x) const;

  private:
    MPSTensor source_;
    std::optional<Matrix> insert_;
    Matrix matrix_;
};

TransferChannel transfer_channel(const MPSTensor &tensor, std::optional<Matrix> insert = std::nullopt);

/// Boundary data of the infinite chain built from a tensor after rescaling
/// it to unit channel spectral radius. left/right are normalized so that
/// tr(left * right) = 1.
struct FixedPoints {
    double spectral_radius = 0.0;
    Matrix left;
    Matrix right;
    std::vector<complex> spectrum;  ///< rescaled channel spectrum, sorted
    Length xi = Length::infinite();
    bool degenerate = false;
};

/// Fixed points of the identity channel. For a degenerate top eigenspace the
/// fixed points are the projections of the identity onto that eigenspace.
FixedPoints channel_fixed_points(const MPSTensor &tensor);

/// Correlation length from a sorted spectrum: -1/ln(|l2|/|l1|), divergent
/// when the relative gap falls below kDegeneracyGap.
Length correlation_length(const std::vector<complex> &sorted_spectrum);

enum class DegeneracyPolicy { Strict, Tolerant };

struct CanonicalData {
    MPSTensor tensor;
    Matrix right_fixed_point;  ///< identity when gauge_fixed
    Matrix left_fixed_point;   ///< Lambda, trace one
    std::vector<complex> spectrum;
    Length xi = Length::infinite();
    bool degenerate = false;
    bool gauge_fixed = false;
    double scale = 1.0;  ///< matrices were divided by this
    Matrix gauge;        ///< A_i -> gauge^-1 A_i gauge
};

/// Rescale to unit spectral radius and gauge so the channel fixes the
/// identity. Strict mode throws DegeneracyError when the dominant eigenvalue
/// is not unique; tolerant mode flags it and keeps whatever gauge is valid.
CanonicalData canonicalize(const MPSTensor &tensor, DegeneracyPolicy policy = DegeneracyPolicy::Strict);

/// tr(A_{i1} ... A_{in}) for a periodic chain.
complex amplitude(const MPSTensor &tensor, std::span<const std::string> outcome);
complex amplitude(const MPSTensor &tensor, std::span<const std::size_t> outcome);

/// <psi| u^{(x)n} |psi> on an n-site window of the infinite chain, from n
/// applications of the mixed transfer channel.
complex string_expectation_by_channel(const MPSTensor &tensor, const Matrix &u, int n);

/// The same quantity from an explicit sum over all d^n outcome strings.
/// Throws ResourceError for n > 6.
complex string_expectation_by_enumeration(const MPSTensor &tensor, const Matrix &u, int n);

/// Oracle for string expectations: runs both routes (enumeration only for
/// n <= 6) and throws std::logic_error if they disagree beyond 1e-9.
/// Throws ResourceError for n > 10.
complex brute_force_string_expectation(const MPSTensor &tensor, const Matrix &u, int n);

}  // namespace sptmqc

#endif
