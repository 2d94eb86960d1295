// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end for the chain transfer sweeps.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qchain/errors.hpp"
#include "qchain/sweeps.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct SweepOptions {
  int sites = 10;
  int dim = 3;
  std::vector<double> q;
  std::vector<std::string> roots;
  double t_min = 0.0;
  double t_max = 2.0 * std::numbers::pi;
  int steps = 2001;
  double lambda = 1.0;
  std::string couplings;
  std::uint64_t seed = 0;
  std::string out;
};

void add_sweep_options(CLI::App* cmd, SweepOptions& o) {
  cmd->add_option("--sites", o.sites, "number of chain sites n+1")->capture_default_str();
  cmd->add_option("--dim", o.dim, "encoded qudit dimension D")->capture_default_str();
  cmd->add_option("--q", o.q, "real deformation parameter (repeatable)");
  cmd->add_option("--root-of-unity", o.roots,
                  "root-of-unity order d, optionally d:+ or d:- (repeatable)");
  cmd->add_option("--t-min", o.t_min, "first lambda*t")->capture_default_str();
  cmd->add_option("--t-max", o.t_max, "last lambda*t")->capture_default_str();
  cmd->add_option("--steps", o.steps, "grid points")->capture_default_str();
  cmd->add_option("--lambda", o.lambda, "perfect-transfer coupling scale")->capture_default_str();
  cmd->add_option("--couplings", o.couplings, "comma-separated custom couplings J_1..J_n");
  cmd->add_option("--seed", o.seed, "run seed recorded in the metadata")->capture_default_str();
  cmd->add_option("--out", o.out, "output CSV path (stdout when omitted)");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw qchain::ConfigError("couplings: cannot parse '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

qchain::SweepConfig make_config(const SweepOptions& o) {
  qchain::SweepConfig c;
  c.sites = o.sites;
  c.dim = o.dim;
  c.grid = {o.t_min, o.t_max, o.steps};
  c.seed = o.seed;
  try {
    c.deformations.clear();
    for (double q : o.q) c.deformations.push_back(qchain::Deformation::real(q));
    for (const auto& r : o.roots) {
      c.deformations.push_back(qchain::parse_deformation("root:" + r));
    }
    if (c.deformations.empty()) c.deformations.push_back(qchain::Deformation::undeformed());
    c.profile = o.couplings.empty()
                    ? qchain::CouplingProfile::perfect_transfer(o.lambda)
                    : qchain::CouplingProfile::custom(parse_list(o.couplings));
  } catch (const qchain::DomainError& e) {
    throw qchain::ConfigError(std::string("deformation/couplings: ") + e.what());
  }
  c.validate();
  return c;
}

template <typename Fn>
int with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) return fn(std::cout);
  // Render fully before touching the file so failures leave nothing behind.
  std::ostringstream buffer;
  const int code = fn(buffer);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "error: out: cannot open '" << path << "' for writing\n";
    return kExitFailure;
  }
  file << buffer.str();
  if (!file.flush()) {
    std::cerr << "error: out: write to '" << path << "' failed\n";
    return kExitFailure;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum state transfer through chains of q-deformed oscillators"};
  app.require_subcommand(1);

  SweepOptions time_opts;
  auto* time_cmd = app.add_subcommand("time-sweep", "average fidelity versus lambda*t");
  add_sweep_options(time_cmd, time_opts);

  SweepOptions max_opts;
  auto* max_cmd = app.add_subcommand("max-sweep", "maximum average fidelity per deformation");
  add_sweep_options(max_cmd, max_opts);

  int n_max = 9;
  std::string identity_out;
  auto* id_cmd = app.add_subcommand("identity-check", "collective-spin rotation identity residuals");
  id_cmd->add_option("--n-max", n_max, "largest n to check")->capture_default_str();
  id_cmd->add_option("--out", identity_out, "output CSV path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*time_cmd) {
      const auto config = make_config(time_opts);
      return with_output(time_opts.out, [&](std::ostream& os) {
        qchain::run_time_sweep(config, os);
        return 0;
      });
    }
    if (*max_cmd) {
      const auto config = make_config(max_opts);
      return with_output(max_opts.out, [&](std::ostream& os) {
        qchain::run_max_fidelity_sweep(config, os);
        return 0;
      });
    }
    if (*id_cmd) {
      return with_output(identity_out, [&](std::ostream& os) {
        return qchain::run_identity_check(n_max, os) ? 0 : kExitFailure;
      });
    }
  } catch (const qchain::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
