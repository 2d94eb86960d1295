// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "qchain/qalgebra.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qchain/errors.hpp"
#include "qchain/format.hpp"

namespace qchain {

Deformation Deformation::real(double q) {
  if (!std::isfinite(q) || q <= 0.0) {
    throw DomainError("deformation parameter q must be finite and > 0");
  }
  return Deformation(Kind::Real, q, 0, +1);
}

Deformation Deformation::root_of_unity(int order, int sign) {
  if (order < 2) {
    throw DomainError("root-of-unity order d must be >= 2");
  }
  if (sign != 1 && sign != -1) {
    throw DomainError("root-of-unity sign must be +1 or -1");
  }
  return Deformation(Kind::RootOfUnity, 0.0, order, sign);
}

double Deformation::q() const {
  if (is_root_of_unity()) {
    throw DomainError("q() requested for a root-of-unity deformation");
  }
  return q_;
}

int Deformation::order() const {
  if (!is_root_of_unity()) {
    throw DomainError("order() requested for a real deformation");
  }
  return order_;
}

std::complex<double> Deformation::complex_q() const {
  if (!is_root_of_unity()) return {q_, 0.0};
  return std::polar(1.0, sign_ * std::numbers::pi / order_);
}

std::optional<int> Deformation::occupation_cap() const {
  if (!is_root_of_unity()) return std::nullopt;
  return order_ - 1;
}

double Deformation::qnumber(int m) const {
  if (m < 0) throw DomainError("q-number requested for negative m");
  if (m == 0) return 0.0;
  if (is_root_of_unity()) {
    // Zeros at multiples of d are structural.
    if (m % order_ == 0) return 0.0;
    const double theta = std::numbers::pi / order_;
    return std::sin(m * theta) / std::sin(theta);
  }
  if (q_ == 1.0) return static_cast<double>(m);
  // q = e^h: [m] = sinh(m h) / sinh(h), free of cancellation near q = 1.
  const double h = std::log(q_);
  return std::sinh(m * h) / std::sinh(h);
}

double Deformation::qfactorial(int m) const {
  if (m < 0) throw DomainError("q-factorial requested for negative m");
  if (is_root_of_unity() && m >= order_) {
    std::ostringstream msg;
    msg << "q-factorial K_" << m << " vanishes at root of unity of order "
        << order_ << ": state |" << m << "> is not normalizable";
    throw DomainError(msg.str());
  }
  double k = 1.0;
  for (int j = 1; j <= m; ++j) k *= qnumber(j);
  return k;
}

std::string Deformation::label() const {
  std::ostringstream out;
  if (is_root_of_unity()) {
    out << "root:" << order_ << ':' << (sign_ > 0 ? '+' : '-');
  } else {
    out << "q=" << shortest(q_);
  }
  return out.str();
}

Deformation parse_deformation(const std::string& text) {
  if (text.rfind("q=", 0) == 0) {
    std::size_t used = 0;
    const std::string body = text.substr(2);
    double q = 0.0;
    try {
      q = std::stod(body, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != body.size()) {
      throw DomainError("malformed deformation label '" + text + "'");
    }
    return Deformation::real(q);
  }
  if (text.rfind("root:", 0) == 0) {
    const auto colon = text.find(':', 5);
    const std::string order_text = text.substr(5, colon == std::string::npos
                                                      ? std::string::npos
                                                      : colon - 5);
    int sign = +1;
    if (colon != std::string::npos) {
      const std::string s = text.substr(colon + 1);
      if (s == "+") sign = +1;
      else if (s == "-") sign = -1;
      else throw DomainError("malformed deformation label '" + text + "'");
    }
    std::size_t used = 0;
    int order = 0;
    try {
      order = std::stoi(order_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != order_text.size()) {
      throw DomainError("malformed deformation label '" + text + "'");
    }
    return Deformation::root_of_unity(order, sign);
  }
  throw DomainError("malformed deformation label '" + text + "'");
}

}  // namespace qchain
