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

#pragma once

#include <cstdint>
#include <vector>

namespace qlocal {

/// A subset of the qubits of an n-qubit network. Qubit indices are 1-based
/// and stored strictly increasing. The empty subset is valid and represents
/// the empty system (the complement of the whole network).
class QubitSubset {
 public:
  QubitSubset(int n, std::vector<int> members);

  /// The whole system {1, ..., n}.
  static QubitSubset whole(int n);
  /// The empty system on an n-qubit network.
  static QubitSubset empty(int n);

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool is_empty() const { return members_.empty(); }
  bool is_whole() const { return size() == n_; }
  /// 2^|subset|.
  std::int64_t dim() const { return std::int64_t{1} << members_.size(); }

  bool contains(int qubit) const;
  bool contains(const QubitSubset& other) const;
  bool disjoint_from(const QubitSubset& other) const;
  QubitSubset complement() const;
  /// Sorted union; throws ArgumentError if the subsets overlap or disagree on n.
  QubitSubset disjoint_union(const QubitSubset& other) const;
  /// Set difference this \ other; other must be contained in this.
  QubitSubset minus(const QubitSubset& other) const;

  bool operator==(const QubitSubset& other) const {
    return n_ == other.n_ && members_ == other.members_;
  }

 private:
  int n_;
  std::vector<int> members_;
};

}  // namespace qlocal
