// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "qchain/sweeps.hpp"

#include <cmath>
#include <sstream>

#include "qchain/errors.hpp"
#include "qchain/format.hpp"

namespace qchain {

namespace {

constexpr int kCsvDigits = 12;

void write_metadata(std::ostream& out, const std::string& command, const SweepConfig& c) {
  std::ostringstream deformations;
  for (std::size_t i = 0; i < c.deformations.size(); ++i) {
    deformations << (i ? ";" : "") << c.deformations[i].label();
  }
  out << "# qchain " << kToolVersion << '\n'
      << "# command=" << command << '\n'
      << "# sites=" << c.sites << '\n'
      << "# dim=" << c.dim << '\n'
      << "# deformations=" << deformations.str() << '\n'
      << "# couplings=" << c.profile.label() << '\n'
      << "# t_min=" << shortest(c.grid.t_min) << '\n'
      << "# t_max=" << shortest(c.grid.t_max) << '\n'
      << "# steps=" << c.grid.steps << '\n'
      << "# seed=" << c.seed << '\n';
}

}  // namespace

std::vector<double> TimeGrid::points() const {
  std::vector<double> t(static_cast<std::size_t>(std::max(steps, 0)));
  const double span = t_max - t_min;
  for (int i = 0; i < steps; ++i) {
    t[i] = t_min + span * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  if (steps >= 2) t.back() = t_max;
  return t;
}

void SweepConfig::validate() const {
  if (sites < 2) throw ConfigError("sites: must be >= 2");
  if (dim < 2) throw ConfigError("dim: must be >= 2");
  if (deformations.empty()) throw ConfigError("deformations: at least one --q or --root-of-unity");
  if (grid.steps < 2) throw ConfigError("steps: must be >= 2");
  if (!std::isfinite(grid.t_min) || !std::isfinite(grid.t_max)) {
    throw ConfigError("t-min/t-max: must be finite");
  }
  if (grid.t_min < 0.0) throw ConfigError("t-min: must be >= 0");
  if (!(grid.t_min < grid.t_max)) throw ConfigError("t-min/t-max: need t-min < t-max");
  try {
    for (const auto& p : deformations) encoding(p).validate();
  } catch (const DimensionError& e) {
    throw ConfigError(std::string("couplings: ") + e.what());
  }
}

MaxFidelity max_fidelity(std::span<const CurvePoint> curve) {
  if (curve.empty()) throw DomainError("empty fidelity curve");
  MaxFidelity best{curve.front().avg_fidelity, curve.front().t};
  for (const auto& p : curve) {
    if (p.avg_fidelity > best.max_avg_fidelity) best = {p.avg_fidelity, p.t};
  }
  return best;
}

MaxFidelity max_fidelity(const EncodingSpec& spec, const TimeGrid& grid) {
  const TransferModel model(spec);
  const auto times = grid.points();
  const auto curve = transfer_curve(model, times);
  return max_fidelity(curve);
}

void run_time_sweep(const SweepConfig& config, std::ostream& out) {
  config.validate();
  write_metadata(out, "time-sweep", config);
  out << "lambda_t,deformation,avg_fidelity";
  for (int m = 1; m < config.dim; ++m) out << ",f" << m << "_abs";
  out << '\n';
  out.precision(kCsvDigits);

  const auto times = config.grid.points();
  for (const auto& p : config.deformations) {
    const TransferModel model(config.encoding(p));
    const auto curve = transfer_curve(model, times);
    const std::string label = p.label();
    for (const auto& point : curve) {
      out << point.t << ',' << label << ',' << point.avg_fidelity;
      for (double f : point.amplitude_abs) out << ',' << f;
      out << '\n';
    }
  }
}

void run_max_fidelity_sweep(const SweepConfig& config, std::ostream& out) {
  config.validate();
  write_metadata(out, "max-sweep", config);
  out << "deformation,max_avg_fidelity,optimal_lambda_t\n";
  out.precision(kCsvDigits);
  for (const auto& p : config.deformations) {
    const auto best = max_fidelity(config.encoding(p), config.grid);
    out << p.label() << ',' << best.max_avg_fidelity << ',' << best.optimal_t << '\n';
  }
}

bool run_identity_check(int n_max, std::ostream& out) {
  if (n_max < 1) throw ConfigError("n-max: must be >= 1");
  out << "# qchain " << kToolVersion << '\n'
      << "# command=identity-check\n"
      << "# n_max=" << n_max << '\n'
      << "n,residual,pass\n";
  out.precision(kCsvDigits);
  bool ok = true;
  for (int n = 1; n <= n_max; ++n) {
    const double r = rotation_identity_residual(n);
    const bool pass = r <= kIdentityTolerance;
    ok = ok && pass;
    out << n << ',' << r << ',' << (pass ? 1 : 0) << '\n';
  }
  return ok;
}

}  // namespace qchain
