// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "qchain/chain_operators.hpp"
#include "qchain/dynamics.hpp"
#include "qchain/qalgebra.hpp"

namespace qchain {

/// A quDit of dimension `dim` written into the sender site of a
/// `sites`-site chain.
struct EncodingSpec {
  int dim = 3;
  int sites = 10;
  Deformation deformation = Deformation::undeformed();
  CouplingProfile profile = CouplingProfile::perfect_transfer();

  /// Throws ConfigError for dim < 2, sites < 2, or dim > d at a root of
  /// unity; DimensionError for a custom profile of the wrong length.
  void validate() const;
};

/// Sender-to-receiver qudit map at one time.
///
/// block(m, m') is the receiver operator E(|m><m'|), a dim x dim matrix in
/// the receiver occupation basis.
class TransferChannel {
 public:
  TransferChannel(int dim, double t);

  int dim() const { return dim_; }
  double time() const { return t_; }

  const Eigen::MatrixXcd& block(int m, int mp) const { return blocks_[index(m, mp)]; }
  Eigen::MatrixXcd& block(int m, int mp) { return blocks_[index(m, mp)]; }

  /// f_m = <0,...,0,m| e^{-iHt} |m,0,...,0>; f_0 = 1.
  const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }
  std::vector<std::complex<double>>& amplitudes() { return amplitudes_; }

  /// E(rho) for a dim x dim input density matrix.
  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;

  /// Choi matrix sum_{m,m'} |m><m'| (x) E(|m><m'|), of size dim^2.
  Eigen::MatrixXcd choi() const;

 private:
  std::size_t index(int m, int mp) const {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(mp);
  }

  int dim_;
  double t_;
  std::vector<Eigen::MatrixXcd> blocks_;
  std::vector<std::complex<double>> amplitudes_;
};

/// Receiver-local gate sum_m e^{i phi_m} |m><m|.
struct PhaseGate {
  std::vector<double> phases;
  // Set where |f_m| was too small to define a phase; that phase is 0.
  std::vector<bool> undetermined;
};

/// Layer propagators 0..dim-1 for one encoding, built once and shared by
/// every time point.
class TransferModel {
 public:
  explicit TransferModel(EncodingSpec spec);

  const EncodingSpec& spec() const { return spec_; }
  const Propagator& layer(int m) const { return layers_.at(m); }

  TransferChannel channel(double t) const;

 private:
  // Pair of basis states sharing their first n sites, one in layer m and
  // one in layer m'.
  struct SharedEnvironment {
    Eigen::Index row;
    Eigen::Index col;
    Eigen::Index receiver_row;
    Eigen::Index receiver_col;
  };

  EncodingSpec spec_;
  std::vector<Propagator> layers_;
  std::vector<std::vector<SharedEnvironment>> overlaps_;  // dim * dim lists
};

TransferChannel encode_and_evolve(const EncodingSpec& spec, double t);

/// phi_m = arg f_0 - arg f_m.
PhaseGate optimal_phase_gate(const TransferChannel& ch);

/// (1/D^2) sum_{m,m'} <m| U E(|m><m'|) U^dag |m'>.
double entanglement_fidelity(const TransferChannel& ch, const PhaseGate& gate);

/// Haar average over pure inputs of <psi| U E(|psi><psi|) U^dag |psi>,
/// via F_avg = (D F_e + 1) / (D + 1).
double average_fidelity(const TransferChannel& ch, const PhaseGate& gate);

struct CurvePoint {
  double t = 0.0;
  double avg_fidelity = 0.0;
  // |f_1|, ..., |f_{D-1}|
  std::vector<double> amplitude_abs;
};

CurvePoint evaluate_point(const TransferModel& model, double t);

/// OpenMP over time points.
std::vector<CurvePoint> transfer_curve(const TransferModel& model, std::span<const double> times);

/// Single-threaded reference for transfer_curve.
std::vector<CurvePoint> transfer_curve_serial(const TransferModel& model,
                                              std::span<const double> times);

std::vector<double> fidelity_curve(const EncodingSpec& spec, std::span<const double> times);

double choi_min_eigenvalue(const TransferChannel& ch);

/// max_{m,m'} |Tr E(|m><m'|) - delta_{mm'}|
double trace_preservation_error(const TransferChannel& ch);

struct GateRefinement {
  PhaseGate gate;
  double improvement = 0.0;
};

/// Coordinate ascent on phi_1..phi_{D-1} starting from `start`, treating
/// average_fidelity as a black box. Reports how much it gained.
GateRefinement refine_phase_gate(const TransferChannel& ch, const PhaseGate& start,
                                 int max_sweeps = 50);

}  // namespace qchain
