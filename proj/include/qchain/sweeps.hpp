// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qchain/chain_operators.hpp"
#include "qchain/qalgebra.hpp"
#include "qchain/transfer.hpp"

namespace qchain {

inline constexpr const char* kToolVersion = "0.1.0";

struct TimeGrid {
  double t_min = 0.0;
  double t_max = 2.0 * std::numbers::pi;
  int steps = 2001;

  /// t_i = t_min + i (t_max - t_min) / (steps - 1), endpoints included.
  std::vector<double> points() const;
};

struct SweepConfig {
  int sites = 10;
  int dim = 3;
  std::vector<Deformation> deformations{Deformation::undeformed()};
  TimeGrid grid;
  CouplingProfile profile = CouplingProfile::perfect_transfer();
  // Recorded in the metadata only; no sweep output is random.
  std::uint64_t seed = 0;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  EncodingSpec encoding(const Deformation& p) const { return {dim, sites, p, profile}; }
};

struct MaxFidelity {
  double max_avg_fidelity = 0.0;
  // First grid point reaching the maximum.
  double optimal_t = 0.0;
};

MaxFidelity max_fidelity(const EncodingSpec& spec, const TimeGrid& grid);
MaxFidelity max_fidelity(std::span<const CurvePoint> curve);

/// CSV: lambda_t,deformation,avg_fidelity,f1_abs,...; blocks per deformation.
void run_time_sweep(const SweepConfig& config, std::ostream& out);

/// CSV: deformation,max_avg_fidelity,optimal_lambda_t.
void run_max_fidelity_sweep(const SweepConfig& config, std::ostream& out);

/// Writes n,residual rows for n = 1..n_max; true when every residual is
/// at most kIdentityTolerance. Throws ConfigError for n_max < 1.
inline constexpr double kIdentityTolerance = 1e-9;
bool run_identity_check(int n_max, std::ostream& out);

}  // namespace qchain
