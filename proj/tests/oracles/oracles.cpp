// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <omp.h>

#include <cmath>
#include <complex>
#include <random>

namespace qchain::oracle {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j < i ? c[i - 1][j] : 0);
  }
  return c[n][k];
}

std::vector<std::vector<int>> enumerate_layer(int sites, int layer, int max_occ) {
  std::vector<std::vector<int>> out;
  std::vector<int> occ(sites, 0);
  while (true) {
    int total = 0;
    for (int x : occ) total += x;
    if (total == layer) out.push_back(occ);
    int pos = sites - 1;
    while (pos >= 0 && occ[pos] == max_occ) occ[pos--] = 0;
    if (pos < 0) break;
    ++occ[pos];
  }
  return out;
}

Eigen::Index product_index(const std::vector<int>& occ, int local_dim) {
  Eigen::Index idx = 0;
  for (int x : occ) idx = idx * local_dim + x;
  return idx;
}

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::MatrixXd site_operator(int sites, int local_dim, int site, const Eigen::MatrixXd& op) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
  for (int s = 0; s < sites; ++s) {
    out = kron(out, s == site ? op : Eigen::MatrixXd::Identity(local_dim, local_dim));
  }
  return out;
}

}  // namespace

Eigen::MatrixXd kron_hamiltonian(int sites, int local_dim, const std::vector<double>& qnumber,
                                 const std::vector<double>& couplings) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(local_dim, local_dim);
  for (int m = 1; m < local_dim; ++m) a(m - 1, m) = std::sqrt(qnumber[m]);
  const Eigen::Index dim = static_cast<Eigen::Index>(std::pow(local_dim, sites));
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int b = 0; b + 1 < sites; ++b) {
    const Eigen::MatrixXd left = site_operator(sites, local_dim, b, a);
    const Eigen::MatrixXd right = site_operator(sites, local_dim, b + 1, a);
    h += 0.5 * couplings[b] * (left.transpose() * right + right.transpose() * left);
  }
  return h;
}

double monte_carlo_fidelity(const TransferChannel& ch, const PhaseGate& gate, int samples,
                            std::uint64_t seed) {
  using C = std::complex<double>;
  const int dim = ch.dim();
  Eigen::VectorXcd u(dim);
  for (int m = 0; m < dim; ++m) u(m) = std::polar(1.0, gate.phases[m]);

  double total = 0.0;
#pragma omp parallel reduction(+ : total)
  {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(omp_get_thread_num())};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd psi(dim);
#pragma omp for schedule(static)
    for (int s = 0; s < samples; ++s) {
      for (int m = 0; m < dim; ++m) psi(m) = C(normal(rng), normal(rng));
      psi.normalize();
      const Eigen::MatrixXcd rho = ch.apply(psi * psi.adjoint());
      const Eigen::MatrixXcd rotated = u.asDiagonal() * rho * u.conjugate().asDiagonal();
      total += (psi.adjoint() * rotated * psi)(0, 0).real();
    }
  }
  return total / samples;
}

TransferChannel random_channel(int dim, int kraus_count, std::uint64_t seed) {
  using C = std::complex<double>;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  // Stack of Kraus operators G, normalised by (G^dag G)^{-1/2}.
  Eigen::MatrixXcd g(dim * kraus_count, dim);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = C(normal(rng), normal(rng));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.adjoint() * g);
  const Eigen::MatrixXcd inv_sqrt = es.eigenvectors() *
                                    es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                                    es.eigenvectors().adjoint();
  const Eigen::MatrixXcd kraus = g * inv_sqrt;

  TransferChannel ch(dim, 0.0);
  for (int m = 0; m < dim; ++m) {
    for (int mp = 0; mp < dim; ++mp) {
      Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
      for (int k = 0; k < kraus_count; ++k) {
        const auto block = kraus.middleRows(k * dim, dim);
        out += block.col(m) * block.col(mp).adjoint();
      }
      ch.block(m, mp) = out;
    }
  }
  ch.amplitudes()[0] = 1.0;
  return ch;
}

}  // namespace qchain::oracle
