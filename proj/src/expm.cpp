// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "qchain/expm.hpp"

#include <algorithm>
#include <cmath>

namespace qchain {

namespace {
constexpr int kPadeDegree = 6;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return a;

  // Scale so that ||A / 2^s||_1 <= 1/2.
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXcd scaled = a / std::ldexp(1.0, squarings);

  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd num = identity;
  Eigen::MatrixXcd den = identity;
  Eigen::MatrixXcd power = identity;
  double c = 1.0;
  for (int k = 1; k <= kPadeDegree; ++k) {
    c *= static_cast<double>(kPadeDegree - k + 1) /
         static_cast<double>(k * (2 * kPadeDegree - k + 1));
    power = power * scaled;
    num += c * power;
    den += ((k % 2) ? -c : c) * power;
  }
  Eigen::MatrixXcd result = den.partialPivLu().solve(num);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace qchain
