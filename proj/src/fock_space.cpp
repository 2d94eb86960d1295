// Copyright 2026 The qchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "qchain/fock_space.hpp"

#include <algorithm>

#include "qchain/errors.hpp"

namespace qchain {

namespace {

void enumerate(int site, int remaining, int cap, OccupationVector& current,
               std::vector<OccupationVector>& out) {
  const int last = static_cast<int>(current.size()) - 1;
  if (site == last) {
    if (remaining <= cap) {
      current[site] = remaining;
      out.push_back(current);
    }
    return;
  }
  // Remaining sites can absorb at most cap each.
  const long long room = static_cast<long long>(cap) * (last - site);
  for (int k = std::min(remaining, cap); k >= 0; --k) {
    if (remaining - k > room) break;
    current[site] = k;
    enumerate(site + 1, remaining - k, cap, current, out);
  }
  current[site] = 0;
}

}  // namespace

FockLayer::FockLayer(int sites, int layer, std::optional<int> cap)
    : sites_(sites), layer_(layer), cap_(cap) {
  if (sites < 2) throw DimensionError("a chain needs at least 2 sites");
  if (layer < 0) throw DimensionError("Fock layer must be >= 0");
  if (cap && *cap < 1) throw DimensionError("occupation cap must be >= 1");

  OccupationVector current(sites, 0);
  enumerate(0, layer, cap.value_or(layer), current, states_);
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::optional<std::size_t> FockLayer::index_of(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != sites_) return std::nullopt;
  const OccupationVector key(v.begin(), v.end());
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FockLayer::sender_index() const {
  OccupationVector v(sites_, 0);
  v.front() = layer_;
  return index_of(v);
}

std::optional<std::size_t> FockLayer::receiver_index() const {
  OccupationVector v(sites_, 0);
  v.back() = layer_;
  return index_of(v);
}

}  // namespace qchain
