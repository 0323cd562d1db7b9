// Copyright 2026 The Authors.
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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mapdelta/graph.hpp"

namespace mapdelta {

/// Subset of EdgeIds 1..64 as a bit mask; bit i holds EdgeId i+1.
using EdgeSet = std::uint64_t;

inline constexpr std::uint32_t kMaxGroundSize = 64;

constexpr EdgeSet edge_bit(EdgeId id) { return EdgeSet{1} << (id.value - 1); }
constexpr bool contains(EdgeSet s, EdgeId id) { return (s & edge_bit(id)) != 0; }
constexpr int cardinality(EdgeSet s) { return std::popcount(s); }

// Builds a mask from 1-based ids; throws Error(GroundSetTooLarge) past 64.
EdgeSet make_edge_set(std::initializer_list<std::uint32_t> ids);
EdgeSet make_edge_set(std::span<const EdgeId> ids);
std::vector<EdgeId> elements(EdgeSet s);

// Mask of EdgeIds 1..m.
EdgeSet full_ground(std::size_t m);

/// Canonical order: smaller sets first, equal sizes compared
/// lexicographically on their sorted elements.
bool canonical_less(EdgeSet a, EdgeSet b) noexcept;

/// `{1,3,4}`; the empty set prints as `{}`.
std::string format_set(EdgeSet s);

/// A deduplicated collection of subsets of a ground set, stored in canonical
/// order. Equality compares ground sets and members.
class SetFamily {
 public:
  SetFamily() = default;
  // Members outside `ground` widen the ground set to cover them.
  SetFamily(EdgeSet ground, std::vector<EdgeSet> members);

  EdgeSet ground() const noexcept { return ground_; }
  std::span<const EdgeSet> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(EdgeSet s) const;
  bool is_subfamily_of(const SetFamily& other) const;

  // Every member replaced by its complement in the ground set.
  SetFamily complemented() const;
  // Members of least / largest cardinality.
  SetFamily smallest_members() const;
  SetFamily largest_members() const;

  int min_cardinality() const;
  int max_cardinality() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  EdgeSet ground_ = 0;
  std::vector<EdgeSet> members_;
  // Members sorted by raw mask value, for contains().
  std::vector<EdgeSet> lookup_;
};

}  // namespace mapdelta
