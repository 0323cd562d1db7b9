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

#include <optional>
#include <string>

#include "mapdelta/graph.hpp"
#include "mapdelta/map.hpp"
#include "mapdelta/set_family.hpp"

namespace mapdelta {

/// A failed exchange: no partner exists for `element` when moving from
/// `first` towards `second`. `element` is empty when the two sets violate
/// equicardinality instead.
struct ExchangeViolation {
  EdgeSet first = 0;
  EdgeSet second = 0;
  std::optional<EdgeId> element;

  std::string describe() const;
  friend bool operator==(const ExchangeViolation&, const ExchangeViolation&) = default;
};

struct ExchangeResult {
  bool holds = true;
  std::optional<ExchangeViolation> violation;

  explicit operator bool() const noexcept { return holds; }
};

/// For all F1, F2 and x in F1 ^ F2 some y in F1 ^ F2 (possibly x itself) has
/// F1 ^ {x, y} in the family. Reports the first violation, scanning F1 then
/// F2 in canonical order and x ascending. Throws Error(EmptyFamily).
ExchangeResult check_symmetric_exchange(const SetFamily& family);

/// Matroid basis exchange: for all B1, B2 and x in B1 \ B2 some y in B2 \ B1
/// has B1 ^ {x, y} in the family. Throws Error(EmptyFamily).
ExchangeResult check_basis_exchange(const SetFamily& family);

struct Matroid {
  SetFamily bases;

  EdgeSet ground() const noexcept { return bases.ground(); }
  int rank() const { return bases.min_cardinality(); }
  friend bool operator==(const Matroid&, const Matroid&) = default;
};

// Both throw Error(NotDeltaMatroid) when symmetric exchange fails, and
// Error(EmptyFamily) on an empty family.
Matroid upper_matroid(const SetFamily& family);
Matroid lower_matroid(const SetFamily& family);

/// Edge sets of all spanning trees, by exhaustive search over subsets of
/// size |V| - 1. Ground set is every edge id of `g`. Throws
/// Error(DisconnectedGraph).
SetFamily spanning_tree_bases(const LabeledGraph& g);

/// Complements of the spanning trees: bases of the cocycle matroid.
SetFamily cotree_bases(const LabeledGraph& g);

bool parity_uniform(const SetFamily& family);

// True when both even and odd cardinalities occur.
bool has_both_parities(const SetFamily& family);

struct RankGap {
  int upper_rank = 0;
  int lower_rank = 0;
  int euler = 0;

  bool holds() const noexcept { return upper_rank - lower_rank == 2 - euler; }
};

RankGap rank_gap(const CombinatorialMap& map, const SetFamily& feasible);

/// rank(upper) - rank(lower) == 2 - euler_characteristic, using the
/// Hamiltonian family of `map`.
bool rank_gap_check(const CombinatorialMap& map);

}  // namespace mapdelta
