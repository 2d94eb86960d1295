// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "qchain/transfer.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qchain/errors.hpp"

namespace qchain {

namespace {
constexpr double kVanishingAmplitude = 1e-12;
}

void EncodingSpec::validate() const {
  if (dim < 2) throw ConfigError("dim: encoding dimension must be >= 2");
  if (sites < 2) throw ConfigError("sites: chain needs at least 2 sites");
  if (deformation.is_root_of_unity() && dim > deformation.order()) {
    std::ostringstream msg;
    msg << "dim: encoding dimension " << dim << " exceeds root-of-unity order "
        << deformation.order() << "; |m> with m >= d is not normalizable";
    throw ConfigError(msg.str());
  }
  profile.couplings(sites - 1);
}

TransferChannel::TransferChannel(int dim, double t)
    : dim_(dim),
      t_(t),
      blocks_(static_cast<std::size_t>(dim) * dim, Eigen::MatrixXcd::Zero(dim, dim)),
      amplitudes_(dim, 0.0) {}

Eigen::MatrixXcd TransferChannel::apply(const Eigen::MatrixXcd& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw DimensionError("input operator does not match the channel dimension");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int m = 0; m < dim_; ++m)
    for (int mp = 0; mp < dim_; ++mp) out += rho(m, mp) * block(m, mp);
  return out;
}

Eigen::MatrixXcd TransferChannel::choi() const {
  const Eigen::Index d = dim_;
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int m = 0; m < dim_; ++m)
    for (int mp = 0; mp < dim_; ++mp) j.block(m * d, mp * d, d, d) = block(m, mp);
  return j;
}

TransferModel::TransferModel(EncodingSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  const auto cap = spec_.deformation.occupation_cap();
  std::vector<std::shared_ptr<const FockLayer>> bases;
  for (int m = 0; m < spec_.dim; ++m) {
    auto basis = std::make_shared<const FockLayer>(spec_.sites, m, cap);
    if (basis->empty()) throw ConfigError("dim: Fock layer has no states under the cap");
    bases.push_back(basis);
    layers_.push_back(diagonalize(build_hamiltonian(basis, spec_.profile, spec_.deformation)));
  }

  // Receiver operators: sum over the occupations of sites 1..n, which must
  // agree between the two layers.
  const int receiver = spec_.sites - 1;
  overlaps_.resize(static_cast<std::size_t>(spec_.dim) * spec_.dim);
  OccupationVector partner;
  for (int m = 0; m < spec_.dim; ++m) {
    for (int mp = 0; mp < spec_.dim; ++mp) {
      auto& list = overlaps_[static_cast<std::size_t>(m) * spec_.dim + mp];
      for (std::size_t i = 0; i < bases[m]->size(); ++i) {
        const auto& v = bases[m]->state(i);
        const int r = v[receiver];
        const int rp = mp - (m - r);
        if (rp < 0) continue;
        partner = v;
        partner[receiver] = rp;
        const auto j = bases[mp]->index_of(partner);
        if (!j) continue;
        list.push_back({Eigen::Index(i), Eigen::Index(*j), r, rp});
      }
    }
  }
}

TransferChannel TransferModel::channel(double t) const {
  const int dim = spec_.dim;
  TransferChannel ch(dim, t);
  std::vector<Eigen::VectorXcd> evolved;
  evolved.reserve(dim);
  for (int m = 0; m < dim; ++m) {
    const auto& basis = layers_[m].basis();
    evolved.push_back(layers_[m].evolve_basis_state(*basis.sender_index(), t));
    ch.amplitudes()[m] = evolved.back()(static_cast<Eigen::Index>(*basis.receiver_index()));
  }
  for (int m = 0; m < dim; ++m) {
    for (int mp = 0; mp < dim; ++mp) {
      auto& out = ch.block(m, mp);
      for (const auto& o : overlaps_[static_cast<std::size_t>(m) * dim + mp]) {
        out(o.receiver_row, o.receiver_col) += evolved[m](o.row) * std::conj(evolved[mp](o.col));
      }
    }
  }
  return ch;
}

TransferChannel encode_and_evolve(const EncodingSpec& spec, double t) {
  if (t < 0.0) throw DomainError("transfer time must be >= 0");
  return TransferModel(spec).channel(t);
}

PhaseGate optimal_phase_gate(const TransferChannel& ch) {
  const auto& f = ch.amplitudes();
  PhaseGate gate{std::vector<double>(f.size(), 0.0), std::vector<bool>(f.size(), false)};
  const double reference = std::arg(f[0]);
  for (std::size_t m = 1; m < f.size(); ++m) {
    if (std::abs(f[m]) < kVanishingAmplitude) {
      gate.undetermined[m] = true;
      continue;
    }
    // Wrap into (-pi, pi].
    gate.phases[m] = std::arg(std::polar(1.0, reference - std::arg(f[m])));
  }
  return gate;
}

double entanglement_fidelity(const TransferChannel& ch, const PhaseGate& gate) {
  const int dim = ch.dim();
  if (static_cast<int>(gate.phases.size()) != dim) {
    throw DimensionError("phase gate does not match the channel dimension");
  }
  std::complex<double> sum = 0.0;
  for (int m = 0; m < dim; ++m) {
    for (int mp = 0; mp < dim; ++mp) {
      sum += std::polar(1.0, gate.phases[m] - gate.phases[mp]) * ch.block(m, mp)(m, mp);
    }
  }
  return sum.real() / (double(dim) * dim);
}

double average_fidelity(const TransferChannel& ch, const PhaseGate& gate) {
  const double d = ch.dim();
  return (d * entanglement_fidelity(ch, gate) + 1.0) / (d + 1.0);
}

CurvePoint evaluate_point(const TransferModel& model, double t) {
  const TransferChannel ch = model.channel(t);
  CurvePoint point;
  point.t = t;
  point.avg_fidelity = average_fidelity(ch, optimal_phase_gate(ch));
  for (std::size_t m = 1; m < ch.amplitudes().size(); ++m) {
    point.amplitude_abs.push_back(std::abs(ch.amplitudes()[m]));
  }
  return point;
}

std::vector<CurvePoint> transfer_curve(const TransferModel& model, std::span<const double> times) {
  std::vector<CurvePoint> out(times.size());
  const auto n = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = evaluate_point(model, times[i]);
  return out;
}

std::vector<CurvePoint> transfer_curve_serial(const TransferModel& model,
                                              std::span<const double> times) {
  std::vector<CurvePoint> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(evaluate_point(model, t));
  return out;
}

std::vector<double> fidelity_curve(const EncodingSpec& spec, std::span<const double> times) {
  if (times.empty()) throw DomainError("fidelity curve needs at least one time");
  for (double t : times) {
    if (!(t >= 0.0)) throw DomainError("transfer time must be >= 0");
  }
  const TransferModel model(spec);
  const auto points = transfer_curve(model, times);
  std::vector<double> f;
  f.reserve(points.size());
  for (const auto& p : points) f.push_back(p.avg_fidelity);
  return f;
}

double choi_min_eigenvalue(const TransferChannel& ch) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(ch.choi(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("Choi eigensolver failed");
  return solver.eigenvalues().minCoeff();
}

double trace_preservation_error(const TransferChannel& ch) {
  double worst = 0.0;
  for (int m = 0; m < ch.dim(); ++m) {
    for (int mp = 0; mp < ch.dim(); ++mp) {
      const std::complex<double> expected = (m == mp) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(ch.block(m, mp).trace() - expected));
    }
  }
  return worst;
}

GateRefinement refine_phase_gate(const TransferChannel& ch, const PhaseGate& start,
                                 int max_sweeps) {
  GateRefinement result{start, 0.0};
  const double initial = average_fidelity(ch, start);
  double current = initial;
  auto& phases = result.gate.phases;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = current;
    for (std::size_t k = 1; k < phases.size(); ++k) {
      // F is a + b cos(phi_k) + c sin(phi_k) in each coordinate.
      phases[k] = 0.0;
      const double f0 = average_fidelity(ch, result.gate);
      phases[k] = std::numbers::pi / 2;
      const double f1 = average_fidelity(ch, result.gate);
      phases[k] = std::numbers::pi;
      const double f2 = average_fidelity(ch, result.gate);
      const double a = 0.5 * (f0 + f2);
      const double b = 0.5 * (f0 - f2);
      const double c = f1 - a;
      phases[k] = std::atan2(c, b);
      current = average_fidelity(ch, result.gate);
    }
    if (current - before < 1e-15) break;
  }
  result.improvement = current - initial;
  return result;
}

}  // namespace qchain
