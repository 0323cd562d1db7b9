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

#include "mapdelta/subgraph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <thread>

#include "mapdelta/disjoint_sets.hpp"
#include "mapdelta/error.hpp"

namespace mapdelta {
namespace {

// The two edges of a monochromatic pair inside a quadrilateral.
struct PairEdges {
  FlagPair first;
  FlagPair second;
};

PairEdges green_pair(const Quadrilateral& q) { return {{q.flags[0], q.flags[3]}, {q.flags[1], q.flags[2]}}; }
PairEdges red_pair(const Quadrilateral& q) { return {{q.flags[0], q.flags[1]}, {q.flags[2], q.flags[3]}}; }

void add_pair(DisjointSets& sets, const PairEdges& p) {
  sets.unite(p.first.first, p.first.second);
  sets.unite(p.second.first, p.second.second);
}

DisjointSets black_components(const CombinatorialMap& map) {
  DisjointSets sets(map.flag_count());
  for (Flag f = 0; f < map.flag_count(); ++f) sets.unite(f, map.black(f));
  return sets;
}

DisjointSets with_color(DisjointSets sets, const CombinatorialMap& map, Color c) {
  for (Flag f = 0; f < map.flag_count(); ++f) sets.unite(f, map.partner(c, f));
  return sets;
}

std::size_t checked_edge_count(const CombinatorialMap& map, const EnumerateOptions& options) {
  std::size_t limit = std::min(options.max_edges, kMaxEnumerableEdges);
  if (map.edge_count() > limit) {
    throw Error(ErrorCode::GroundSetTooLarge, "map has " + std::to_string(map.edge_count()) +
                                                  " edges; exhaustive enumeration is limited to " +
                                                  std::to_string(limit));
  }
  return map.edge_count();
}

// Runs `accept` over every selection mask, split into contiguous ranges per
// worker, and returns the accepted masks as a family over EdgeIds 1..m.
SetFamily collect(std::size_t m, unsigned threads,
                  const std::function<bool(EdgeSet, DisjointSets&, DisjointSets&)>& accept) {
  const EdgeSet total = EdgeSet{1} << m;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  // Small spaces are not worth the thread start-up.
  if (total < (EdgeSet{1} << 12)) threads = 1;
  threads = static_cast<unsigned>(std::min<EdgeSet>(threads, total));

  std::vector<std::vector<EdgeSet>> found(threads);
  auto work = [&](unsigned worker) {
    DisjointSets a, b;
    EdgeSet begin = total * worker / threads;
    EdgeSet end = total * (worker + 1) / threads;
    for (EdgeSet mask = begin; mask < end; ++mask) {
      if (accept(mask, a, b)) found[worker].push_back(mask);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  std::vector<EdgeSet> members;
  for (auto& part : found) members.insert(members.end(), part.begin(), part.end());
  return SetFamily(full_ground(m), std::move(members));
}

}  // namespace

std::vector<std::vector<Flag>> TwoFactor::cycles() const {
  std::vector<bool> seen(neighbors.size(), false);
  std::vector<std::vector<Flag>> out;
  for (Flag start = 0; start < neighbors.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Flag> cycle;
    Flag prev = start;
    Flag f = start;
    do {
      seen[f] = true;
      cycle.push_back(f);
      // Digons have both neighbours equal; either step closes the cycle.
      Flag next = neighbors[f][0] != prev ? neighbors[f][0] : neighbors[f][1];
      if (cycle.size() == 1) next = neighbors[f][0];
      prev = f;
      f = next;
    } while (f != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

TwoFactor selection_subgraph(const CombinatorialMap& map, const Selection& selection) {
  TwoFactor out;
  out.neighbors.resize(map.flag_count());
  for (Flag f = 0; f < map.flag_count(); ++f) {
    Color c = selection.choice(map.edge_of(f)) == PairChoice::Green ? Color::Green : Color::Red;
    out.neighbors[f] = {map.black(f), map.partner(c, f)};
  }
  return out;
}

std::size_t component_count(const CombinatorialMap& map, const Selection& selection) {
  DisjointSets sets = black_components(map);
  for (const auto& q : map.quadrilaterals()) {
    add_pair(sets, selection.choice(q.id) == PairChoice::Green ? green_pair(q) : red_pair(q));
  }
  return sets.component_count();
}

bool is_fully_black_hamiltonian(const CombinatorialMap& map, const Selection& selection) {
  return component_count(map, selection) == 1;
}

SetFamily enumerate_feasible_gamma(const CombinatorialMap& map, const EnumerateOptions& options) {
  const std::size_t m = checked_edge_count(map, options);
  const DisjointSets black = black_components(map);
  auto quads = map.quadrilaterals();
  return collect(m, options.threads, [&](EdgeSet mask, DisjointSets& sets, DisjointSets&) {
    sets = black;
    for (const auto& q : quads) {
      add_pair(sets, contains(mask, q.id) ? green_pair(q) : red_pair(q));
    }
    return sets.component_count() == 1;
  });
}

SetFamily enumerate_feasible_k(const CombinatorialMap& map, const EnumerateOptions& options) {
  const std::size_t m = checked_edge_count(map, options);
  const DisjointSets black = black_components(map);
  // K + R already holds every red pair, so only green choices add to it;
  // symmetrically for K + G.
  const DisjointSets black_red = with_color(black, map, Color::Red);
  const DisjointSets black_green = with_color(black, map, Color::Green);
  auto quads = map.quadrilaterals();
  return collect(m, options.threads, [&](EdgeSet mask, DisjointSets& with_red, DisjointSets& with_green) {
    with_red = black_red;
    for (const auto& q : quads) {
      if (contains(mask, q.id)) add_pair(with_red, green_pair(q));
    }
    if (with_red.component_count() != 1) return false;
    with_green = black_green;
    for (const auto& q : quads) {
      if (!contains(mask, q.id)) add_pair(with_green, red_pair(q));
    }
    return with_green.component_count() == 1;
  });
}

HamiltonianSearch find_hamiltonian(const CombinatorialMap& map) {
  HamiltonianSearch search;
  search.selection = Selection::all_green(map.edge_count());
  search.initial_components = component_count(map, search.selection);

  for (std::size_t components = search.initial_components; components > 1;) {
    DisjointSets sets = black_components(map);
    for (const auto& q : map.quadrilaterals()) {
      add_pair(sets, search.selection.choice(q.id) == PairChoice::Green ? green_pair(q) : red_pair(q));
    }
    const Quadrilateral* straddling = nullptr;
    for (const auto& q : map.quadrilaterals()) {
      PairEdges chosen = search.selection.choice(q.id) == PairChoice::Green ? green_pair(q) : red_pair(q);
      if (!sets.same(chosen.first.first, chosen.second.first)) {
        straddling = &q;
        break;
      }
    }
    // A connected flag graph always has one while two or more cycles remain.
    assert(straddling != nullptr);
    if (straddling == nullptr) break;
    search.selection.flip(straddling->id);
    ++search.swaps;
    std::size_t after = component_count(map, search.selection);
    if (after + 1 != components) throw std::logic_error("quadrilateral swap did not merge two cycles");
    components = after;
  }
  return search;
}

}  // namespace mapdelta
