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

#include "mapdelta/delta_matroid.hpp"

#include <algorithm>
#include <numeric>

#include "mapdelta/disjoint_sets.hpp"
#include "mapdelta/error.hpp"
#include "mapdelta/subgraph.hpp"

namespace mapdelta {
namespace {

void require_nonempty(const SetFamily& family) {
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "the family has no members");
}

EdgeSet lowest_bit(EdgeSet s) { return s & -s; }

EdgeId id_of_bit(EdgeSet bit) { return EdgeId{static_cast<std::uint32_t>(std::countr_zero(bit)) + 1}; }

}  // namespace

std::string ExchangeViolation::describe() const {
  std::string out = "F1=" + format_set(first) + " F2=" + format_set(second);
  if (element) {
    out += " x=" + std::to_string(element->value);
  } else {
    out += " (different cardinalities)";
  }
  return out;
}

ExchangeResult check_symmetric_exchange(const SetFamily& family) {
  require_nonempty(family);
  for (EdgeSet f1 : family.members()) {
    for (EdgeSet f2 : family.members()) {
      const EdgeSet diff = f1 ^ f2;
      for (EdgeSet xs = diff; xs != 0; xs &= xs - 1) {
        const EdgeSet x = lowest_bit(xs);
        bool found = false;
        for (EdgeSet ys = diff; ys != 0 && !found; ys &= ys - 1) {
          // y == x toggles a single element.
          found = family.contains(f1 ^ x ^ (lowest_bit(ys) == x ? 0 : lowest_bit(ys)));
        }
        if (!found) return {false, ExchangeViolation{f1, f2, id_of_bit(x)}};
      }
    }
  }
  return {};
}

ExchangeResult check_basis_exchange(const SetFamily& family) {
  require_nonempty(family);
  if (family.min_cardinality() != family.max_cardinality()) {
    return {false, ExchangeViolation{family.members().front(), family.members().back(), std::nullopt}};
  }
  for (EdgeSet b1 : family.members()) {
    for (EdgeSet b2 : family.members()) {
      for (EdgeSet xs = b1 & ~b2; xs != 0; xs &= xs - 1) {
        const EdgeSet x = lowest_bit(xs);
        bool found = false;
        for (EdgeSet ys = b2 & ~b1; ys != 0 && !found; ys &= ys - 1) {
          found = family.contains(b1 ^ x ^ lowest_bit(ys));
        }
        if (!found) return {false, ExchangeViolation{b1, b2, id_of_bit(x)}};
      }
    }
  }
  return {};
}

Matroid upper_matroid(const SetFamily& family) {
  auto check = check_symmetric_exchange(family);
  if (!check) throw Error(ErrorCode::NotDeltaMatroid, check.violation->describe());
  return Matroid{family.largest_members()};
}

Matroid lower_matroid(const SetFamily& family) {
  auto check = check_symmetric_exchange(family);
  if (!check) throw Error(ErrorCode::NotDeltaMatroid, check.violation->describe());
  return Matroid{family.smallest_members()};
}

SetFamily spanning_tree_bases(const LabeledGraph& g) {
  g.check_well_formed();
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "graph '" + g.name + "' is not connected");

  EdgeSet ground = 0;
  std::vector<const LabeledEdge*> candidates;
  for (const auto& e : g.edges) {
    const EdgeId id[] = {e.id};
    ground |= make_edge_set(id);
    if (!e.is_loop()) candidates.push_back(&e);
  }

  const std::size_t k = g.vertex_count() - 1;
  std::vector<EdgeSet> trees;
  if (k > candidates.size()) return SetFamily(ground, {});

  // Lexicographic walk over k-subsets of candidate indices.
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  DisjointSets sets;
  while (true) {
    sets.reset(g.vertex_count());
    bool acyclic = true;
    EdgeSet tree = 0;
    for (std::size_t i : pick) {
      const auto& e = *candidates[i];
      if (!sets.unite(static_cast<std::uint32_t>(e.u), static_cast<std::uint32_t>(e.v))) {
        acyclic = false;
        break;
      }
      tree |= edge_bit(e.id);
    }
    if (acyclic) trees.push_back(tree);

    std::size_t i = k;
    while (i > 0 && pick[i - 1] == candidates.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return SetFamily(ground, std::move(trees));
}

SetFamily cotree_bases(const LabeledGraph& g) { return spanning_tree_bases(g).complemented(); }

bool parity_uniform(const SetFamily& family) {
  require_nonempty(family);
  const int parity = cardinality(family.members().front()) % 2;
  return std::all_of(family.members().begin(), family.members().end(),
                     [parity](EdgeSet s) { return cardinality(s) % 2 == parity; });
}

bool has_both_parities(const SetFamily& family) { return !family.empty() && !parity_uniform(family); }

RankGap rank_gap(const CombinatorialMap& map, const SetFamily& feasible) {
  return {upper_matroid(feasible).rank(), lower_matroid(feasible).rank(), euler_characteristic(map)};
}

bool rank_gap_check(const CombinatorialMap& map) { return rank_gap(map, enumerate_feasible_gamma(map)).holds(); }

}  // namespace mapdelta
