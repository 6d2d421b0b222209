// Copyright 2026 The coxcompact Authors
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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxcompact/index_set.hpp"

namespace coxcompact::coxeter {

/// Order m_ij of s_i s_j. kInfiniteOrder marks a missing relator.
using Order = std::uint32_t;
inline constexpr Order kInfiniteOrder = std::numeric_limits<Order>::max();

inline bool is_finite(Order m) { return m != kInfiniteOrder; }

/// A standard Coxeter presentation: generator names and the symmetric table of
/// orders m_ij (m_ii = 1, m_ij >= 2 or infinite off the diagonal).
class CoxeterSystem {
 public:
  /// `orders` is row-major k x k. Throws kInvalidOrder, kDuplicateGenerator,
  /// kInvalidArgument (rank 0 or above 64).
  CoxeterSystem(std::vector<std::string> generators, std::vector<Order> orders);

  struct Relation {
    std::size_t i;
    std::size_t j;
    Order m;
  };
  /// Builds the table from the listed pairs; unlisted off-diagonal pairs are infinite.
  static CoxeterSystem from_relations(std::vector<std::string> generators,
                                      const std::vector<Relation>& relations);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  Order order(std::size_t i, std::size_t j) const { return orders_.at(i * rank() + j); }
  IndexSet all() const { return IndexSet::first(rank()); }

  /// Whether the Coxeter diagram (edges for finite m_ij) is connected.
  bool has_connected_diagram() const;

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Order> orders_;
};

/// Parses a system document:
///   {"generators": ["s1", ...], "orders": [["s1", "s2", 3], ["s1", "s3", "inf"], ...]}
/// Throws kMalformedDocument (with line/column when the JSON itself is broken),
/// kInvalidOrder, kDuplicateGenerator.
CoxeterSystem parse_system(std::string_view text);

/// Inverse of parse_system; lists every finite off-diagonal pair once.
std::string serialize_system(const CoxeterSystem& system);

/// Names of the members of `subset`, in generator order.
std::vector<std::string> names_of(const CoxeterSystem& system, IndexSet subset);

}  // namespace coxcompact::coxeter
