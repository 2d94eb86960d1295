// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "qchain/chain_operators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qchain/errors.hpp"
#include "qchain/expm.hpp"
#include "qchain/format.hpp"

namespace qchain {

CouplingProfile CouplingProfile::perfect_transfer(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("perfect-transfer scale lambda must be finite and > 0");
  }
  return CouplingProfile(Kind::PerfectTransfer, lambda, {});
}

CouplingProfile CouplingProfile::uniform(double coupling) {
  if (!std::isfinite(coupling)) throw DomainError("coupling must be finite");
  return CouplingProfile(Kind::Uniform, coupling, {});
}

CouplingProfile CouplingProfile::custom(std::vector<double> couplings) {
  if (couplings.empty()) throw DomainError("custom profile needs at least one bond");
  for (double j : couplings) {
    if (!std::isfinite(j)) throw DomainError("coupling must be finite");
  }
  return CouplingProfile(Kind::Custom, 1.0, std::move(couplings));
}

std::vector<double> CouplingProfile::couplings(int bonds) const {
  std::vector<double> j(bonds, 0.0);
  switch (kind_) {
    case Kind::PerfectTransfer: {
      const int n = bonds;
      for (int b = 1; b <= n; ++b) j[b - 1] = scale_ * std::sqrt(double(b) * (n + 1 - b));
      break;
    }
    case Kind::Uniform:
      std::fill(j.begin(), j.end(), scale_);
      break;
    case Kind::Custom:
      if (static_cast<int>(custom_.size()) != bonds) {
        std::ostringstream msg;
        msg << "custom coupling profile has " << custom_.size()
            << " bonds but the chain has " << bonds;
        throw DimensionError(msg.str());
      }
      j = custom_;
      break;
  }
  return j;
}

std::string CouplingProfile::label() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::PerfectTransfer:
      out << "pst:" << shortest(scale_);
      break;
    case Kind::Uniform:
      out << "uniform:" << shortest(scale_);
      break;
    case Kind::Custom:
      out << "custom:";
      for (std::size_t i = 0; i < custom_.size(); ++i) out << (i ? "," : "") << shortest(custom_[i]);
      break;
  }
  return out.str();
}

namespace {

void check_bond(std::span<const int> v, int bond) {
  if (bond < 0 || bond + 1 >= static_cast<int>(v.size())) {
    throw DimensionError("bond index out of range");
  }
}

}  // namespace

Hop hop_toward_sender(const Deformation& p, std::span<const int> v, int bond) {
  check_bond(v, bond);
  Hop hop{OccupationVector(v.begin(), v.end()), 0.0};
  if (v[bond + 1] == 0) return hop;
  hop.amplitude = std::sqrt(p.qnumber(v[bond] + 1) * p.qnumber(v[bond + 1]));
  hop.target[bond] += 1;
  hop.target[bond + 1] -= 1;
  return hop;
}

Hop hop_toward_receiver(const Deformation& p, std::span<const int> v, int bond) {
  check_bond(v, bond);
  Hop hop{OccupationVector(v.begin(), v.end()), 0.0};
  if (v[bond] == 0) return hop;
  hop.amplitude = std::sqrt(p.qnumber(v[bond]) * p.qnumber(v[bond + 1] + 1));
  hop.target[bond] -= 1;
  hop.target[bond + 1] += 1;
  return hop;
}

LayerHamiltonian build_hamiltonian(std::shared_ptr<const FockLayer> basis,
                                   const CouplingProfile& profile,
                                   const Deformation& p,
                                   std::size_t max_dimension) {
  if (!basis) throw DimensionError("null Fock layer basis");
  if (basis->size() > max_dimension) {
    std::ostringstream msg;
    msg << "Fock layer " << basis->layer() << " of a " << basis->sites()
        << "-site chain has " << basis->size()
        << " states, above the dense limit of " << max_dimension;
    throw DimensionError(msg.str());
  }
  const auto j = profile.couplings(basis->sites() - 1);
  const auto dim = static_cast<Eigen::Index>(basis->size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  // Each a_b^dag a_{b+1} element is mirrored by its adjoint.
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto& v = basis->state(col);
    for (int b = 0; b + 1 < basis->sites(); ++b) {
      const Hop hop = hop_toward_sender(p, v, b);
      if (hop.amplitude == 0.0) continue;
      const auto row = basis->index_of(hop.target);
      if (!row) continue;  // excluded by the occupation cap
      const double element = 0.5 * j[b] * hop.amplitude;
      h(static_cast<Eigen::Index>(*row), col) += element;
      h(col, static_cast<Eigen::Index>(*row)) += element;
    }
  }
  return LayerHamiltonian(std::move(basis), profile, p, std::move(h));
}

CollectiveOperators build_collective(int n) {
  if (n < 1) throw DimensionError("collective operators need n >= 1");
  using C = std::complex<double>;
  const Eigen::Index dim = n + 1;
  CollectiveOperators ops;
  ops.splus = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 1; j <= n; ++j) {
    ops.splus(j - 1, j) = std::sqrt(double(j) * (n + 1 - j));
  }
  ops.sminus = ops.splus.transpose();
  ops.sx = (ops.splus + ops.sminus) / C(2.0, 0.0);
  ops.sy = (ops.splus - ops.sminus) / C(0.0, 2.0);
  return ops;
}

double rotation_identity_residual(int n) {
  const auto ops = build_collective(n);
  using C = std::complex<double>;
  const C i_pi(0.0, std::numbers::pi);
  const Eigen::MatrixXcd forward = expm(i_pi * ops.sx);
  const Eigen::MatrixXcd backward = expm(-i_pi * ops.sx);
  const Eigen::MatrixXcd diff = forward * ops.sminus * backward - ops.splus;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(diff);
  return svd.singularValues()(0);
}

Eigen::MatrixXd layer_annihilator(const Deformation& p, const FockLayer& from,
                                  const FockLayer& to, int site) {
  if (from.sites() != to.sites() || from.layer() != to.layer() + 1) {
    throw DimensionError("annihilator must map layer m+1 into layer m of the same chain");
  }
  if (site < 0 || site >= from.sites()) throw DimensionError("site index out of range");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(to.size()),
                                            static_cast<Eigen::Index>(from.size()));
  OccupationVector w;
  for (std::size_t col = 0; col < from.size(); ++col) {
    const auto& v = from.state(col);
    if (v[site] == 0) continue;
    w = v;
    w[site] -= 1;
    const auto row = to.index_of(w);
    if (!row) continue;
    a(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) =
        std::sqrt(p.qnumber(v[site]));
  }
  return a;
}

double algebra_relation_residual(const Deformation& p, int sites, int max_layer) {
  using C = std::complex<double>;
  const auto cap = p.occupation_cap();
  const C q = p.complex_q();
  double worst = 0.0;

  std::vector<FockLayer> layers;
  for (int m = 0; m <= max_layer + 1; ++m) layers.emplace_back(sites, m, cap);

  for (int m = 0; m <= max_layer; ++m) {
    const FockLayer& here = layers[m];
    if (here.empty()) continue;
    for (int k = 0; k < sites; ++k) {
      // a a^dag through layer m+1, a^dag a through layer m-1.
      const Eigen::MatrixXd up = layer_annihilator(p, layers[m + 1], here, k);
      Eigen::MatrixXcd lhs = (up * up.transpose()).cast<C>();
      if (m > 0) {
        const Eigen::MatrixXd down = layer_annihilator(p, here, layers[m - 1], k);
        lhs -= q * (down.transpose() * down).cast<C>();
      }
      for (std::size_t i = 0; i < here.size(); ++i) {
        const auto& v = here.state(i);
        bool interior = true;
        for (int occ : v) interior = interior && (!cap || occ < *cap);
        if (!interior) continue;
        for (std::size_t j = 0; j < here.size(); ++j) {
          const C expected = (i == j) ? std::pow(q, -v[k]) : C(0.0, 0.0);
          worst = std::max(worst, std::abs(lhs(Eigen::Index(i), Eigen::Index(j)) - expected));
        }
      }
    }
  }
  return worst;
}

}  // namespace qchain
