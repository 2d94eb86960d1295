// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <string>

namespace qchain {

/// Deformation parameter of the q-oscillator algebra.
///
/// Two families are supported: real q > 0, and the unit-circle values
/// q = exp(+-i pi / d) with integer order d >= 2. Root-of-unity parameters
/// keep the integer order so that [d] = 0 holds exactly.
class Deformation {
 public:
  enum class Kind { Real, RootOfUnity };

  static Deformation real(double q);
  static Deformation root_of_unity(int order, int sign = +1);
  static Deformation undeformed() { return real(1.0); }

  Kind kind() const { return kind_; }
  bool is_root_of_unity() const { return kind_ == Kind::RootOfUnity; }

  // Real branch only.
  double q() const;
  // Root-of-unity branch only.
  int order() const;
  int sign() const { return sign_; }

  /// Complex value of q (exp(sign * i pi / d) for roots of unity).
  std::complex<double> complex_q() const;

  /// Highest admissible occupation per site: d - 1 at a root of unity.
  std::optional<int> occupation_cap() const;

  /// The q-number [m] = (q^m - q^-m) / (q - q^-1).
  double qnumber(int m) const;

  /// K_m = [m][m-1]...[1]; throws DomainError when m >= d at a root of unity.
  double qfactorial(int m) const;

  /// `q=<real>` or `root:<d>:<+|->`.
  std::string label() const;

  bool operator==(const Deformation&) const = default;

 private:
  Deformation(Kind kind, double q, int order, int sign)
      : kind_(kind), q_(q), order_(order), sign_(sign) {}

  Kind kind_;
  double q_;
  int order_;
  int sign_;
};

/// Parses the textual label produced by Deformation::label().
Deformation parse_deformation(const std::string& text);

}  // namespace qchain
