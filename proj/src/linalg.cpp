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

#include "qgames/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgames {

namespace {

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) +
                                ": entries must be finite");
  }
}

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x"
       << m.cols();
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Unitary::Unitary(CMatrix m) : mat_(std::move(m)) {
  require_square(mat_, "Unitary");
  require_finite(mat_, "Unitary");
  const CMatrix gram = mat_.adjoint() * mat_;
  const CMatrix eye = CMatrix::Identity(mat_.rows(), mat_.cols());
  const double err = (gram - eye).cwiseAbs().maxCoeff();
  if (err > kMatTol) {
    std::ostringstream os;
    os << "Unitary: U†U deviates from identity by " << err;
    throw std::invalid_argument(os.str());
  }
}

DensityMatrix::DensityMatrix(CMatrix m) : mat_(std::move(m)) {
  require_square(mat_, "DensityMatrix");
  require_finite(mat_, "DensityMatrix");
  const double herm_err = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > kMatTol) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian (deviation " << herm_err << ")";
    throw std::invalid_argument(os.str());
  }
  const Complex tr = mat_.trace();
  if (std::abs(tr.real() - 1.0) > kMatTol || std::abs(tr.imag()) > 1e-12) {
    std::ostringstream os;
    os << "DensityMatrix: trace is " << tr.real() << "+" << tr.imag()
       << "i, expected 1";
    throw std::invalid_argument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(mat_,
                                            Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kMatTol) {
    std::ostringstream os;
    os << "DensityMatrix: not positive semidefinite (min eigenvalue "
       << min_eig << ")";
    throw std::invalid_argument(os.str());
  }
}

Unitary make_unitary(Complex a, Complex b) {
  const double norm2 = std::norm(a) + std::norm(b);
  if (std::abs(norm2 - 1.0) > kMatTol) {
    std::ostringstream os;
    os << "make_unitary: |a|^2 + |b|^2 = " << norm2 << ", expected 1";
    throw std::invalid_argument(os.str());
  }
  CMatrix m(2, 2);
  m << a, b, std::conj(b), -std::conj(a);
  return Unitary(m);
}

Unitary unitary_from_angles(double theta, double alpha, double beta) {
  const Complex a = std::polar(std::cos(theta), alpha);
  const Complex b = std::polar(std::sin(theta), beta);
  return make_unitary(a, b);
}

std::optional<UnitaryParams> canonical_params(const Unitary& u) {
  if (u.dim() != 2) return std::nullopt;
  const CMatrix& m = u.mat();
  // U = e^{i phi} U(a, b) and det U(a, b) = -1, so e^{2 i phi} = -det U.
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const double phi = std::arg(-det) / 2.0;
  const Complex strip = std::polar(1.0, -phi);
  Complex a = strip * m(0, 0);
  Complex b = strip * m(0, 1);
  const Complex lead = std::abs(a) > kPhaseFloor ? a : b;
  if (lead.real() < 0.0 ||
      (std::abs(lead.real()) <= kPhaseFloor && lead.imag() < 0.0)) {
    a = -a;
    b = -b;
  }
  return UnitaryParams{a, b};
}

DensityMatrix pure_density(const CVector& state) {
  if (state.size() < 1) {
    throw std::invalid_argument("pure_density: empty state vector");
  }
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > kMatTol) {
    std::ostringstream os;
    os << "pure_density: state norm is " << norm << ", expected 1";
    throw std::invalid_argument(os.str());
  }
  return DensityMatrix(state * state.adjoint());
}

DensityMatrix basis_density(Eigen::Index dim, Eigen::Index index) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw std::invalid_argument("basis_density: index out of range");
  }
  CMatrix m = CMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix conjugate(const Unitary& u, const DensityMatrix& rho) {
  if (u.dim() != rho.dim()) {
    throw std::invalid_argument("conjugate: dimension mismatch");
  }
  return DensityMatrix(u.mat() * rho.mat() * u.mat().adjoint());
}

DensityMatrix mix_channels(std::span<const std::pair<double, Unitary>> terms,
                           const DensityMatrix& rho) {
  if (terms.empty()) {
    throw std::invalid_argument("mix_channels: empty mixture");
  }
  double total = 0.0;
  for (const auto& [p, u] : terms) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("mix_channels: negative probability");
    }
    if (u.dim() != rho.dim()) {
      throw std::invalid_argument("mix_channels: dimension mismatch");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kMatTol) {
    std::ostringstream os;
    os << "mix_channels: probabilities sum to " << total << ", expected 1";
    throw std::invalid_argument(os.str());
  }
  CMatrix acc = CMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& [p, u] : terms) {
    acc += p * (u.mat() * rho.mat() * u.mat().adjoint());
  }
  return DensityMatrix(std::move(acc));
}

EigResult hermitian_eig(const CMatrix& m) {
  require_square(m, "hermitian_eig");
  require_finite(m, "hermitian_eig");
  if (!is_hermitian(m)) {
    throw std::invalid_argument("hermitian_eig: input is not Hermitian");
  }
  // Symmetrize so fp noise in the upper triangle cannot skew the solve.
  const CMatrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed");
  }
  const Eigen::Index n = m.rows();
  EigResult out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = es.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return out;
}

double off_diagonal_phase(const DensityMatrix& rho, Eigen::Index i,
                          Eigen::Index j) {
  const Eigen::Index n = rho.dim();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw std::invalid_argument("off_diagonal_phase: index out of range");
  }
  if (i == j) {
    throw std::invalid_argument("off_diagonal_phase: indices must differ");
  }
  const Complex entry = rho.mat()(i, j);
  if (std::abs(entry) <= kPhaseFloor) return 0.0;
  return std::arg(entry);
}

}  // namespace qgames
