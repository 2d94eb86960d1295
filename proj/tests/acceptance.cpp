// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails or exceeds its time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "qchain/chain_operators.hpp"
#include "qchain/dynamics.hpp"
#include "qchain/sweeps.hpp"
#include "qchain/transfer.hpp"

using namespace qchain;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

// Reference encoding: ten sites, qutrit, perfect-transfer couplings.
EncodingSpec reference_spec(Deformation p) {
  return {3, 10, p, CouplingProfile::perfect_transfer(1.0)};
}

double gated_fidelity(const TransferChannel& ch) {
  return average_fidelity(ch, optimal_phase_gate(ch));
}

Outcome undeformed_pst() {
  const double f = gated_fidelity(encode_and_evolve(reference_spec(Deformation::real(1.0)), kPi));
  const double err = std::abs(f - 1.0);
  return {err < 1e-9, "|F(pi) - 1| = " + fmt(err)};
}

Outcome first_layer_pst() {
  double worst = 0.0;
  for (int sites : {3, 10}) {
    for (auto p : {Deformation::real(0.5), Deformation::real(0.9), Deformation::real(1.5),
                   Deformation::root_of_unity(3), Deformation::root_of_unity(7)}) {
      const auto ch = encode_and_evolve(EncodingSpec{2, sites, p}, kPi);
      worst = std::max(worst, std::abs(gated_fidelity(ch) - 1.0));
    }
  }
  return {worst < 1e-9, "max |F(pi) - 1| = " + fmt(worst)};
}

Outcome rotation_identity() {
  double worst = 0.0;
  for (int n = 1; n <= 9; ++n) worst = std::max(worst, rotation_identity_residual(n));
  return {worst < 1e-9, "max residual n=1..9 = " + fmt(worst)};
}

Outcome inverse_symmetry() {
  const auto times = TimeGrid{0.0, 2 * kPi, 2001}.points();
  const auto a = fidelity_curve(reference_spec(Deformation::real(1.05)), times);
  const auto b = fidelity_curve(reference_spec(Deformation::real(1.0 / 1.05)), times);
  double worst = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return {worst < 1e-10, "max pointwise |dF| = " + fmt(worst)};
}

Outcome deformation_degrades() {
  const TimeGrid grid{0.0, 2 * kPi, 2001};
  const double undeformed = max_fidelity(reference_spec(Deformation::real(1.0)), grid).max_avg_fidelity;
  const double q12 = max_fidelity(reference_spec(Deformation::real(1.2)), grid).max_avg_fidelity;
  const double q14 = max_fidelity(reference_spec(Deformation::real(1.4)), grid).max_avg_fidelity;
  const bool pass = std::abs(undeformed - 1.0) < 1e-9 && q12 < 0.999 && q14 < 0.999;
  std::ostringstream s;
  s.precision(9);
  s << "max F: q=1 " << undeformed << ", q=1.2 " << q12 << ", q=1.4 " << q14;
  return {pass, s.str()};
}

Outcome bosonic_limit() {
  const TimeGrid grid{0.0, 2 * kPi, 2001};
  const double boson = max_fidelity(reference_spec(Deformation::real(1.0)), grid).max_avg_fidelity;
  std::vector<double> maxima;
  for (int d = 3; d <= 50; ++d) {
    maxima.push_back(max_fidelity(reference_spec(Deformation::root_of_unity(d)), grid).max_avg_fidelity);
  }
  double running = maxima.front();
  double worst_drop = 0.0;
  for (double m : maxima) {
    worst_drop = std::max(worst_drop, running - m);
    running = std::max(running, m);
  }
  const double gap = std::abs(maxima.back() - boson);
  return {gap < 1e-3 && worst_drop < 1e-4,
          "|max(d=50) - max(q=1)| = " + fmt(gap) + ", largest drop over d=3..50 = " +
              fmt(worst_drop)};
}

Outcome propagator_oracle() {
  std::mt19937_64 rng(20260101);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (auto p : {Deformation::real(1.0), Deformation::real(1.3), Deformation::root_of_unity(4)}) {
    for (int m : {1, 2}) {
      const auto basis = std::make_shared<const FockLayer>(3, m, p.occupation_cap());
      const auto h = build_hamiltonian(basis, CouplingProfile::perfect_transfer(), p);
      const auto prop = diagonalize(h);
      for (double t : {0.1, 1.0, kPi, 7.5}) {
        for (int trial = 0; trial < 10; ++trial) {
          Eigen::VectorXcd psi(h.dimension());
          for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = {normal(rng), normal(rng)};
          psi.normalize();
          const Eigen::VectorXcd diff = evolve(prop, psi, t) - evolve_bruteforce(h, psi, t);
          worst = std::max(worst, diff.cwiseAbs().maxCoeff());
        }
      }
    }
  }
  return {worst < 1e-9, "max |eig - expm| = " + fmt(worst)};
}

// (q, t) points drawn with a fixed seed: real q in [0.6, 1.6] or a root of
// unity of order 3..20, t in [0, 2 pi].
std::vector<std::pair<Deformation, double>> sweep_points(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> qdist(0.6, 1.6);
  std::uniform_real_distribution<double> tdist(0.0, 2 * kPi);
  std::uniform_int_distribution<int> ddist(3, 20);
  std::vector<std::pair<Deformation, double>> points;
  for (int i = 0; i < count; ++i) {
    const Deformation p = (i % 4 == 3) ? Deformation::root_of_unity(ddist(rng))
                                       : Deformation::real(qdist(rng));
    points.emplace_back(p, tdist(rng));
  }
  return points;
}

Outcome monte_carlo_fidelity() {
  double worst = 0.0;
  int k = 0;
  for (const auto& [p, t] : sweep_points(10, 4242)) {
    const auto ch = encode_and_evolve(reference_spec(p), t);
    const auto gate = optimal_phase_gate(ch);
    const double exact = average_fidelity(ch, gate);
    const double sampled = oracle::monte_carlo_fidelity(ch, gate, 100000, 1000 + k++);
    worst = std::max(worst, std::abs(exact - sampled));
  }
  return {worst < 1e-2, "max |closed form - Monte Carlo| = " + fmt(worst)};
}

Outcome channel_physicality() {
  double min_eig = 0.0;
  double trace_err = 0.0;
  for (const auto& [p, t] : sweep_points(100, 777)) {
    const auto ch = encode_and_evolve(reference_spec(p), t);
    min_eig = std::min(min_eig, choi_min_eigenvalue(ch));
    trace_err = std::max(trace_err, trace_preservation_error(ch));
  }
  return {min_eig > -1e-10 && trace_err < 1e-10,
          "min Choi eigenvalue = " + fmt(min_eig) + ", max trace error = " + fmt(trace_err)};
}

Outcome algebra_relation() {
  double worst = 0.0;
  for (auto p : {Deformation::real(0.7), Deformation::real(1.6), Deformation::root_of_unity(5)}) {
    worst = std::max(worst, algebra_relation_residual(p, 3, 5));
  }
  return {worst < 1e-10, "max |a a^dag - q a^dag a - q^-N| = " + fmt(worst)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"undeformed perfect transfer (10 sites, D=3, lambda t = pi)", 5, undeformed_pst},
      {"first-layer perfect transfer for every deformation", 10, first_layer_pst},
      {"collective-spin rotation identity n=1..9", 2, rotation_identity},
      {"q <-> 1/q symmetry of fidelity curves", 30, inverse_symmetry},
      {"deformation degrades second-layer transfer", 60, deformation_degrades},
      {"bosonic limit of root-of-unity chains", 300, bosonic_limit},
      {"eigendecomposition vs matrix-exponential propagator", 5, propagator_oracle},
      {"closed-form vs Monte Carlo average fidelity", 60, monte_carlo_fidelity},
      {"channel complete positivity and trace preservation", 60, channel_physicality},
      {"deformed commutation relation on interior states", 2, algebra_relation},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = outcome.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] %s: %s (%.2fs / %.0fs budget%s)\n", pass ? "PASS" : "FAIL", c.name.c_str(),
                outcome.detail.c_str(), seconds, c.budget_seconds,
                in_time ? "" : ", over budget");
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
