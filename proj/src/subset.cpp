// Copyright 2026 The qlocal developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlocal/subset.hpp"

#include <algorithm>
#include <string>

#include "qlocal/errors.hpp"

namespace qlocal {

QubitSubset::QubitSubset(int n, std::vector<int> members)
    : n_(n), members_(std::move(members)) {
  if (n_ < 0) {
    throw ArgumentError("qubit count must be nonnegative");
  }
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > n_) {
      throw ArgumentError("qubit index " + std::to_string(members_[i]) +
                          " out of range [1, " + std::to_string(n_) + "]");
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw ArgumentError("duplicate qubit index " +
                          std::to_string(members_[i]));
    }
  }
}

QubitSubset QubitSubset::whole(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) all[static_cast<std::size_t>(k - 1)] = k;
  return QubitSubset(n, std::move(all));
}

QubitSubset QubitSubset::empty(int n) { return QubitSubset(n, {}); }

bool QubitSubset::contains(int qubit) const {
  return std::binary_search(members_.begin(), members_.end(), qubit);
}

bool QubitSubset::contains(const QubitSubset& other) const {
  if (n_ != other.n_) return false;
  return std::includes(members_.begin(), members_.end(),
                       other.members_.begin(), other.members_.end());
}

bool QubitSubset::disjoint_from(const QubitSubset& other) const {
  for (int q : other.members_) {
    if (contains(q)) return false;
  }
  return true;
}

QubitSubset QubitSubset::complement() const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n_ - size()));
  for (int k = 1; k <= n_; ++k) {
    if (!contains(k)) rest.push_back(k);
  }
  return QubitSubset(n_, std::move(rest));
}

QubitSubset QubitSubset::disjoint_union(const QubitSubset& other) const {
  if (n_ != other.n_) {
    throw ArgumentError("subsets belong to networks of different size");
  }
  if (!disjoint_from(other)) {
    throw ArgumentError("subsets overlap");
  }
  std::vector<int> merged = members_;
  merged.insert(merged.end(), other.members_.begin(), other.members_.end());
  return QubitSubset(n_, std::move(merged));
}

QubitSubset QubitSubset::minus(const QubitSubset& other) const {
  if (!contains(other)) {
    throw ArgumentError("subset difference requires containment");
  }
  std::vector<int> rest;
  for (int q : members_) {
    if (!other.contains(q)) rest.push_back(q);
  }
  return QubitSubset(n_, std::move(rest));
}

}  // namespace qlocal
