// Copyright 2026 The qgames authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGAMES_LINALG_HPP_
#define QGAMES_LINALG_HPP_

// Small dense complex linear algebra for game states: density matrices,
// unitaries, mixed-unitary channels and Hermitian eigendecomposition.
// Dimensions are tiny (2 in the built-in game, <= 8 in practice), so
// everything is double precision and validated against absolute tolerances.

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qgames {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Validation tolerance for matrix invariants (Hermiticity, unitarity,
// trace, positive semidefiniteness).
inline constexpr double kMatTol = 1e-9;
// Below this magnitude an off-diagonal entry is treated as zero and its
// phase as free.
inline constexpr double kPhaseFloor = 1e-12;

// Max-norm of the entrywise difference.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

bool is_hermitian(const CMatrix& m, double tol = kMatTol);

// A unitary matrix (U† U = I within kMatTol). Immutable after construction.
class Unitary {
 public:
  explicit Unitary(CMatrix m);

  const CMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  CMatrix mat_;
};

// A density matrix: Hermitian, trace one, positive semidefinite (all within
// kMatTol). Immutable after construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);

  const CMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  // Real parts of the diagonal: outcome probabilities in the state basis.
  Eigen::VectorXd diagonal() const { return mat_.diagonal().real(); }

 private:
  CMatrix mat_;
};

// Parameters of the two-dimensional unitary family
//   U(a, b) = [[a, b], [conj(b), -conj(a)]],   |a|^2 + |b|^2 = 1.
// Every 2x2 unitary equals some U(a, b) up to a global phase, and global
// phases cancel under conjugation, so the family is fully general for
// strategy purposes.
struct UnitaryParams {
  Complex a;
  Complex b;
};

// Builds U(a, b). Throws std::invalid_argument if |a|^2 + |b|^2 deviates
// from 1 by more than kMatTol.
Unitary make_unitary(Complex a, Complex b);
inline Unitary make_unitary(const UnitaryParams& p) {
  return make_unitary(p.a, p.b);
}

// U(a, b) at the angular coordinates a = e^{i alpha} cos theta,
// b = e^{i beta} sin theta.
Unitary unitary_from_angles(double theta, double alpha, double beta);

// Recovers (a, b) with U = e^{i phi} U(a, b) for a 2x2 unitary, resolving
// the leftover sign so that the first nonzero of (a, b) points into the
// right half plane. Returns nullopt for dim != 2.
std::optional<UnitaryParams> canonical_params(const Unitary& u);

// |psi><psi| for a unit vector. Throws std::invalid_argument off the sphere.
DensityMatrix pure_density(const CVector& state);

// Basis state |i><i| of the given dimension.
DensityMatrix basis_density(Eigen::Index dim, Eigen::Index index);

// U rho U†. Dimensions must agree.
DensityMatrix conjugate(const Unitary& u, const DensityMatrix& rho);

// sum_k p_k U_k rho U_k† for a probability vector p. Throws
// std::invalid_argument if probabilities are negative, do not sum to one
// within kMatTol, or dimensions disagree.
DensityMatrix mix_channels(std::span<const std::pair<double, Unitary>> terms,
                           const DensityMatrix& rho);

struct EigResult {
  Eigen::VectorXd values;  // descending
  CMatrix vectors;         // orthonormal columns, vectors.col(i) <-> values(i)
};

// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
// Throws std::invalid_argument if the input is not Hermitian within kMatTol.
EigResult hermitian_eig(const CMatrix& m);

// arg(rho[i][j]) in radians; zero when |rho[i][j]| <= kPhaseFloor (callers
// treat the phase as free in that case). Requires i != j in range.
double off_diagonal_phase(const DensityMatrix& rho, Eigen::Index i,
                          Eigen::Index j);

}  // namespace qgames

#endif  // QGAMES_LINALG_HPP_
