// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace qchain {

/// Occupation numbers (m_1, ..., m_{n+1}) of a chain, sender first.
using OccupationVector = std::vector<int>;

/// Basis of one Fock layer: all occupation vectors of `sites` sites with
/// total excitation number `layer`, optionally capped per site.
///
/// States are ordered lexicographically decreasing, so (layer, 0, ..., 0)
/// is index 0 and (0, ..., 0, layer) is the last index.
class FockLayer {
 public:
  FockLayer(int sites, int layer, std::optional<int> cap = std::nullopt);

  int sites() const { return sites_; }
  int layer() const { return layer_; }
  std::optional<int> cap() const { return cap_; }

  std::size_t size() const { return states_.size(); }
  // Happens when cap * sites < layer; callers must not encode into it.
  bool empty() const { return states_.empty(); }

  const std::vector<OccupationVector>& states() const { return states_; }
  const OccupationVector& state(std::size_t i) const { return states_.at(i); }

  std::optional<std::size_t> index_of(std::span<const int> v) const;

  // Index of (layer, 0, ..., 0) and (0, ..., 0, layer) respectively.
  std::optional<std::size_t> sender_index() const;
  std::optional<std::size_t> receiver_index() const;

  bool same_space(const FockLayer& other) const {
    return sites_ == other.sites_ && layer_ == other.layer_ &&
           cap_ == other.cap_;
  }

 private:
  int sites_;
  int layer_;
  std::optional<int> cap_;
  std::vector<OccupationVector> states_;
  std::map<OccupationVector, std::size_t, std::less<>> index_;
};

}  // namespace qchain
