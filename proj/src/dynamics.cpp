// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "qchain/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "qchain/errors.hpp"
#include "qchain/expm.hpp"

namespace qchain {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kZeroComponent = 1e-12;

void check_input(const FockLayer& basis, const Eigen::VectorXcd& psi0) {
  if (psi0.size() != static_cast<Eigen::Index>(basis.size())) {
    std::ostringstream msg;
    msg << "state of dimension " << psi0.size() << " does not fit Fock layer "
        << basis.layer() << " of dimension " << basis.size();
    throw DimensionError(msg.str());
  }
  if (std::abs(psi0.norm() - 1.0) > kNormTolerance) {
    throw DomainError("initial state is not normalized");
  }
}

}  // namespace

LayerState LayerState::basis_state(std::shared_ptr<const FockLayer> basis,
                                   std::size_t index) {
  if (!basis || index >= basis->size()) throw DimensionError("basis index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return {std::move(basis), std::move(v)};
}

Propagator::Propagator(LayerHamiltonian hamiltonian) : hamiltonian_(std::move(hamiltonian)) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian_.matrix());
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolver failed for layer " << basis().layer() << " of a "
        << basis().sites() << "-site chain, deformation "
        << hamiltonian_.deformation().label() << ", couplings "
        << hamiltonian_.profile().label();
    throw NumericalError(msg.str());
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
  for (Eigen::Index k = 0; k < eigenvectors_.cols(); ++k) {
    for (Eigen::Index i = 0; i < eigenvectors_.rows(); ++i) {
      const double x = eigenvectors_(i, k);
      if (std::abs(x) > kZeroComponent) {
        if (x < 0.0) eigenvectors_.col(k) *= -1.0;
        break;
      }
    }
  }
}

Eigen::MatrixXcd Propagator::unitary(double t) const {
  const Eigen::VectorXcd phases =
      (eigenvalues_ * std::complex<double>(0.0, -t)).array().exp().matrix();
  const Eigen::MatrixXcd v = eigenvectors_.cast<std::complex<double>>();
  return v * phases.asDiagonal() * v.transpose();
}

Eigen::VectorXcd Propagator::evolve_basis_state(std::size_t index, double t) const {
  const auto row = static_cast<Eigen::Index>(index);
  if (row >= eigenvectors_.rows()) throw DimensionError("basis index out of range");
  Eigen::VectorXcd coeff(eigenvalues_.size());
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
    coeff(k) = std::polar(eigenvectors_(row, k), -eigenvalues_(k) * t);
  }
  return eigenvectors_.cast<std::complex<double>>() * coeff;
}

Propagator diagonalize(LayerHamiltonian h) { return Propagator(std::move(h)); }

Eigen::VectorXcd evolve(const Propagator& prop, const Eigen::VectorXcd& psi0, double t) {
  check_input(prop.basis(), psi0);
  const Eigen::MatrixXcd v = prop.eigenvectors().cast<std::complex<double>>();
  Eigen::VectorXcd coeff = v.transpose() * psi0;
  for (Eigen::Index k = 0; k < coeff.size(); ++k) {
    coeff(k) *= std::polar(1.0, -prop.eigenvalues()(k) * t);
  }
  return v * coeff;
}

LayerState evolve(const Propagator& prop, const LayerState& psi0, double t) {
  if (!psi0.basis || !psi0.basis->same_space(prop.basis())) {
    throw DimensionError("state and propagator belong to different Fock layers");
  }
  return {psi0.basis, evolve(prop, psi0.amplitudes, t)};
}

Eigen::VectorXcd evolve_bruteforce(const LayerHamiltonian& h, const Eigen::VectorXcd& psi0,
                                   double t) {
  check_input(h.basis(), psi0);
  return expm(std::complex<double>(0.0, -t) * h.complex_matrix()) * psi0;
}

}  // namespace qchain
