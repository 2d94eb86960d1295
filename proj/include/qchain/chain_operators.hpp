// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qchain/fock_space.hpp"
#include "qchain/qalgebra.hpp"

namespace qchain {

/// Nearest-neighbour coupling constants J_1..J_n of an (n+1)-site chain.
class CouplingProfile {
 public:
  enum class Kind { PerfectTransfer, Uniform, Custom };

  /// J_j = lambda * sqrt(j (n + 1 - j)).
  static CouplingProfile perfect_transfer(double lambda = 1.0);
  static CouplingProfile uniform(double coupling);
  static CouplingProfile custom(std::vector<double> couplings);

  Kind kind() const { return kind_; }
  double scale() const { return scale_; }

  /// Coupling for each of `bonds` bonds. Throws DimensionError when a
  /// custom profile has the wrong length.
  std::vector<double> couplings(int bonds) const;

  std::string label() const;

 private:
  CouplingProfile(Kind kind, double scale, std::vector<double> custom)
      : kind_(kind), scale_(scale), custom_(std::move(custom)) {}

  Kind kind_;
  double scale_;
  std::vector<double> custom_;
};

/// Result of moving a single excitation across a bond.
struct Hop {
  OccupationVector target;
  double amplitude = 0.0;
};

// Bonds are 0-based: bond b joins sites b and b + 1.

/// a_b^dag a_{b+1}: moves one excitation from site b+1 to site b with
/// amplitude sqrt([m_b + 1][m_{b+1}]). Zero amplitude (and an unchanged
/// target) when site b+1 is empty.
Hop hop_toward_sender(const Deformation& p, std::span<const int> v, int bond);

/// a_{b+1}^dag a_b, the adjoint hop.
Hop hop_toward_receiver(const Deformation& p, std::span<const int> v, int bond);

inline constexpr std::size_t kDefaultMaxLayerDimension = 5000;

/// Chain Hamiltonian sum_j J_j (a_j^dag a_{j+1} + a_{j+1}^dag a_j) / 2
/// restricted to one Fock layer.
///
/// All matrix elements are real for the supported deformations, so the
/// matrix is stored real-symmetric; complex_matrix() gives the Hermitian view.
class LayerHamiltonian {
 public:
  LayerHamiltonian(std::shared_ptr<const FockLayer> basis,
                   CouplingProfile profile, Deformation deformation,
                   Eigen::MatrixXd matrix)
      : basis_(std::move(basis)),
        profile_(std::move(profile)),
        deformation_(deformation),
        matrix_(std::move(matrix)) {}

  const FockLayer& basis() const { return *basis_; }
  const std::shared_ptr<const FockLayer>& shared_basis() const { return basis_; }
  const CouplingProfile& profile() const { return profile_; }
  const Deformation& deformation() const { return deformation_; }

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  Eigen::MatrixXcd complex_matrix() const { return matrix_.cast<std::complex<double>>(); }
  Eigen::Index dimension() const { return matrix_.rows(); }

 private:
  std::shared_ptr<const FockLayer> basis_;
  CouplingProfile profile_;
  Deformation deformation_;
  Eigen::MatrixXd matrix_;
};

LayerHamiltonian build_hamiltonian(
    std::shared_ptr<const FockLayer> basis, const CouplingProfile& profile,
    const Deformation& p,
    std::size_t max_dimension = kDefaultMaxLayerDimension);

/// Collective spin operators on the first Fock layer of an (n+1)-site chain.
struct CollectiveOperators {
  Eigen::MatrixXcd sx;
  Eigen::MatrixXcd sy;
  Eigen::MatrixXcd splus;
  Eigen::MatrixXcd sminus;
};

CollectiveOperators build_collective(int n);

/// Operator-norm residual || e^{i pi Sx} S- e^{-i pi Sx} - S+ ||.
double rotation_identity_residual(int n);

/// Matrix of a_site mapping layer `from` (m+1 excitations) into layer `to`
/// (m excitations). Sites are 0-based.
Eigen::MatrixXd layer_annihilator(const Deformation& p, const FockLayer& from,
                                  const FockLayer& to, int site);

/// Largest deviation of a a^dag - q a^dag a from q^{-N}, over every site and
/// every matrix element whose row state has all occupations below the cap,
/// within the Fock layers 0..max_layer of a `sites`-site chain.
double algebra_relation_residual(const Deformation& p, int sites, int max_layer);

}  // namespace qchain
