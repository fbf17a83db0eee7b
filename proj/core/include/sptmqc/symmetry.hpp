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

#ifndef SPTMQC_SYMMETRY_HPP
#define SPTMQC_SYMMETRY_HPP

#include <array>
#include <map>

#include "sptmqc/mps.hpp"

namespace sptmqc {

/// Cartesian axes; also indexes the spin-1 basis |x>, |y>, |z> (S_mu|mu> = 0).
enum class Axis { x = 0, y = 1, z = 2 };

inline int index(Axis a) { return static_cast<int>(a); }
char axis_name(Axis a);
/// Throws DomainError for anything other than "x", "y", "z".
Axis parse_axis(const std::string &name);

/// Active rotation of the spin-1 Cartesian basis (Rodrigues formula), so
/// spin1_rotation(z, pi/2) maps |x> -> |y>, |y> -> -|x>.
Matrix spin1_rotation(Axis axis, double angle);

/// Physical operator u and the virtual U with sum_j u_ij A_j = c U A_i U^dag.
struct SymmetryAction {
    Matrix physical;
    Matrix virtual_op;
    complex character{1.0, 0.0};  ///< c, the modulus-one channel eigenvalue
    double residual = 0.0;        ///< max-abs violation of the relation above
};

/// Virtual symmetry operator from the modulus-one eigenvector of the mixed
/// channel with insert u. `tensor` must be in canonical gauge.
SymmetryAction extract_virtual_symmetry(const MPSTensor &tensor, const Matrix &u);

enum class Phase { Trivial, D2_SPTO };

struct PhaseLabel {
    Phase value;
    complex commutator_sign;  ///< tr(U_x U_z U_x^dag U_z^dag) / D
};

/// Projective class of the pi-rotation pair.
PhaseLabel classify_d2_phase(const MPSTensor &tensor);

/// The two pi/2 generators of the octahedral group.
enum class Generator { RotX, RotZ };

/// Generator whose rotation axis is `axis` (x or z).
Generator generator_for(Axis axis);

/// A_mu = sigma_mu kron a_mu, protected (Pauli) factor outermost.
class FactorizedTensor {
  public:
    FactorizedTensor(std::array<Matrix, 3> junk_parts, std::map<Generator, Matrix> virtual_junk_symmetries);

    const Matrix &protected_part(int mu) const { return protected_parts_[mu]; }
    const std::array<Matrix, 3> &protected_parts() const { return protected_parts_; }
    const Matrix &junk(int mu) const { return junk_parts_[mu]; }
    const std::array<Matrix, 3> &junk_parts() const { return junk_parts_; }
    const std::map<Generator, Matrix> &virtual_junk_symmetries() const { return virtual_junk_symmetries_; }
    /// Throws SymmetryError when the generator is not recorded.
    const Matrix &junk_symmetry(Generator g) const;
    Eigen::Index junk_dim() const { return junk_parts_[0].rows(); }

    /// The full-space MPS tensor with labels x, y, z.
    const MPSTensor &parent() const { return parent_; }

  private:
    std::array<Matrix, 3> protected_parts_;
    std::array<Matrix, 3> junk_parts_;
    std::map<Generator, Matrix> virtual_junk_symmetries_;
    MPSTensor parent_;
};

/// Finds a basis in which every A_mu is sigma_mu kron a_mu. `tensor` must be
/// canonical and in the D2 SPTO phase.
FactorizedTensor factorize_protected_junk(const MPSTensor &tensor);

struct S4Report {
    double residual_x = 0.0;
    double residual_z = 0.0;
    double max_residual = 0.0;
    bool accepted = false;
};

/// Residuals of the pi/2 x and z rotations; accepted iff both < 1e-8.
S4Report verify_s4_invariance(const MPSTensor &tensor);

}  // namespace sptmqc

#endif
