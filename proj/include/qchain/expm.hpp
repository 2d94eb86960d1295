// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

namespace qchain {

// Matrix exponential by scaling and squaring of a diagonal Pade
// approximant. No eigendecomposition is involved.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

}  // namespace qchain
