// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <memory>

#include "qchain/chain_operators.hpp"
#include "qchain/fock_space.hpp"

namespace qchain {

/// A state vector bound to the Fock layer it lives in.
struct LayerState {
  std::shared_ptr<const FockLayer> basis;
  Eigen::VectorXcd amplitudes;

  /// Unit vector on basis state `index`.
  static LayerState basis_state(std::shared_ptr<const FockLayer> basis, std::size_t index);
};

/// Eigendecomposition H = V diag(e) V^T of one layer Hamiltonian,
/// evaluable at any time.
class Propagator {
 public:
  explicit Propagator(LayerHamiltonian hamiltonian);

  const LayerHamiltonian& hamiltonian() const { return hamiltonian_; }
  const FockLayer& basis() const { return hamiltonian_.basis(); }
  /// Ascending.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  /// Orthonormal columns; each column's first nonzero entry is positive.
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

  /// e^{-iHt} as a dense matrix.
  Eigen::MatrixXcd unitary(double t) const;

  /// Column `index` of e^{-iHt}, i.e. the evolved basis state.
  Eigen::VectorXcd evolve_basis_state(std::size_t index, double t) const;

 private:
  LayerHamiltonian hamiltonian_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

Propagator diagonalize(LayerHamiltonian h);

/// e^{-iHt} psi0 through the cached eigendecomposition. psi0 must have the
/// layer dimension and unit norm.
Eigen::VectorXcd evolve(const Propagator& prop, const Eigen::VectorXcd& psi0, double t);
LayerState evolve(const Propagator& prop, const LayerState& psi0, double t);

/// e^{-iHt} psi0 through a Pade matrix exponential of the Hamiltonian.
/// Slow; kept as an independent route for cross-checks.
Eigen::VectorXcd evolve_bruteforce(const LayerHamiltonian& h, const Eigen::VectorXcd& psi0,
                                   double t);

}  // namespace qchain
