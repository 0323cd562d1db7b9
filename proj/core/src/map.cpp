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

#include "mapdelta/map.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "mapdelta/disjoint_sets.hpp"
#include "mapdelta/error.hpp"

namespace mapdelta {
namespace {

constexpr Flag kNoFlag = std::numeric_limits<Flag>::max();

std::string flag_str(Flag f) { return std::to_string(f); }

std::vector<Flag> to_involution(const std::vector<FlagPair>& pairs, std::size_t n, char color) {
  std::vector<Flag> partner(n, kNoFlag);
  const std::string label(1, color);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::NotInvolution,
                  label + " pair " + flag_str(a) + "-" + flag_str(b) + " names a flag outside 0.." +
                      std::to_string(n == 0 ? 0 : n - 1));
    }
    if (a == b) throw Error(ErrorCode::FixedPoint, label + " pairs flag " + flag_str(a) + " with itself");
    if (partner[a] != kNoFlag || partner[b] != kNoFlag) {
      Flag twice = partner[a] != kNoFlag ? a : b;
      throw Error(ErrorCode::NotInvolution, label + " matches flag " + flag_str(twice) + " twice");
    }
    partner[a] = b;
    partner[b] = a;
  }
  for (Flag f = 0; f < n; ++f) {
    if (partner[f] == kNoFlag) {
      throw Error(ErrorCode::FixedPoint, label + " leaves flag " + flag_str(f) + " unmatched");
    }
  }
  return partner;
}

}  // namespace

Flag CombinatorialMap::partner(Color c, Flag f) const {
  switch (c) {
    case Color::Red: return red_[f];
    case Color::Green: return green_[f];
    case Color::Black: return black_[f];
  }
  return f;
}

std::span<const Flag> CombinatorialMap::involution(Color c) const {
  switch (c) {
    case Color::Red: return red_;
    case Color::Green: return green_;
    case Color::Black: break;
  }
  return black_;
}

MapPairings CombinatorialMap::pairings() const {
  MapPairings out;
  out.flag_count = flag_count();
  auto collect = [this](std::span<const Flag> inv) {
    std::vector<FlagPair> pairs;
    for (Flag f = 0; f < inv.size(); ++f) {
      if (f < inv[f]) pairs.emplace_back(f, inv[f]);
    }
    return pairs;
  };
  out.red = collect(red_);
  out.green = collect(green_);
  out.black = collect(black_);
  return out;
}

CombinatorialMap validate_map(const MapPairings& input) {
  const std::size_t n = input.flag_count;
  if (n == 0) throw Error(ErrorCode::BadQuadrilateral, "a map needs at least one quadrilateral");

  CombinatorialMap map;
  map.red_ = to_involution(input.red, n, 'R');
  map.green_ = to_involution(input.green, n, 'G');
  map.black_ = to_involution(input.black, n, 'B');

  for (Flag f = 0; f < n; ++f) {
    if (map.red_[f] == map.green_[f]) {
      throw Error(ErrorCode::RedGreenParallel,
                  "flags " + flag_str(f) + " and " + flag_str(map.red_[f]) + " are joined by both red and green");
    }
  }

  map.edge_of_.assign(n, 0);
  for (Flag f = 0; f < n; ++f) {
    if (map.edge_of_[f] != 0) continue;
    Flag r = map.red_[f];
    Flag gr = map.green_[r];
    Flag g = map.green_[f];
    if (map.red_[gr] != g || gr == f) {
      throw Error(ErrorCode::BadQuadrilateral, "the red/green cycle through flag " + flag_str(f) + " is not a 4-cycle");
    }
    Quadrilateral q{EdgeId{static_cast<std::uint32_t>(map.quads_.size() + 1)}, {f, r, gr, g}};
    for (Flag x : q.flags) map.edge_of_[x] = q.id.value;
    map.quads_.push_back(q);
  }

  DisjointSets sets(n);
  for (Flag f = 0; f < n; ++f) {
    sets.unite(f, map.red_[f]);
    sets.unite(f, map.green_[f]);
    sets.unite(f, map.black_[f]);
  }
  if (sets.component_count() != 1) {
    Flag stray = 0;
    while (sets.same(0, stray)) ++stray;
    throw Error(ErrorCode::Disconnected, "flag " + flag_str(stray) + " is not reachable from flag 0");
  }

  assert(is_edge_two_connected(map));
  return map;
}

std::span<const Quadrilateral> quadrilaterals(const CombinatorialMap& map) { return map.quadrilaterals(); }

std::vector<std::vector<Flag>> orbit_cycles(const CombinatorialMap& map, CyclePair pair) {
  Color first = Color::Red;
  Color second = Color::Black;
  switch (pair) {
    case CyclePair::RB: break;
    case CyclePair::RG: second = Color::Green; break;
    case CyclePair::GB: first = Color::Green; break;
  }
  std::vector<bool> seen(map.flag_count(), false);
  std::vector<std::vector<Flag>> cycles;
  for (Flag start = 0; start < map.flag_count(); ++start) {
    if (seen[start]) continue;
    std::vector<Flag> cycle;
    Flag f = start;
    bool use_first = true;
    while (!seen[f]) {
      seen[f] = true;
      cycle.push_back(f);
      f = map.partner(use_first ? first : second, f);
      use_first = !use_first;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<std::uint32_t> cycle_index(const CombinatorialMap& map, CyclePair pair) {
  std::vector<std::uint32_t> index(map.flag_count());
  auto cycles = orbit_cycles(map, pair);
  for (std::uint32_t i = 0; i < cycles.size(); ++i) {
    for (Flag f : cycles[i]) index[f] = i;
  }
  return index;
}

namespace {

LabeledGraph incidence_graph(const CombinatorialMap& map, CyclePair pair, char prefix) {
  auto index = cycle_index(map, pair);
  std::uint32_t count = 0;
  for (auto i : index) count = std::max(count, i + 1);

  LabeledGraph g;
  for (std::uint32_t i = 0; i < count; ++i) g.vertices.push_back(prefix + std::to_string(i + 1));
  for (const auto& q : map.quadrilaterals()) {
    // RB cycles meet the quadrilateral at its two ends (flags 0 and 2); GB
    // cycles at its two sides (flags 0 and 1).
    Flag other = pair == CyclePair::RB ? q.flags[2] : q.flags[1];
    g.edges.push_back({q.id, index[q.flags[0]], index[other]});
  }
  return g;
}

}  // namespace

LabeledGraph underlying_graph(const CombinatorialMap& map) { return incidence_graph(map, CyclePair::RB, 'v'); }

LabeledGraph dual_graph(const CombinatorialMap& map) { return incidence_graph(map, CyclePair::GB, 'f'); }

int euler_characteristic(const CombinatorialMap& map) {
  auto v = orbit_cycles(map, CyclePair::RB).size();
  auto f = orbit_cycles(map, CyclePair::GB).size();
  return static_cast<int>(v) - static_cast<int>(map.edge_count()) + static_cast<int>(f);
}

bool is_orientable(const CombinatorialMap& map) {
  std::vector<std::int8_t> side(map.flag_count(), -1);
  std::vector<Flag> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    Flag f = stack.back();
    stack.pop_back();
    for (Color c : {Color::Red, Color::Green, Color::Black}) {
      Flag g = map.partner(c, f);
      if (side[g] < 0) {
        side[g] = static_cast<std::int8_t>(1 - side[f]);
        stack.push_back(g);
      } else if (side[g] == side[f]) {
        return false;
      }
    }
  }
  return true;
}

bool is_edge_two_connected(const CombinatorialMap& map) {
  const std::size_t n = map.flag_count();
  struct Link {
    Color color;
    Flag a;
  };
  std::vector<Link> links;
  for (Color c : {Color::Red, Color::Green, Color::Black}) {
    for (Flag f = 0; f < n; ++f) {
      Flag g = map.partner(c, f);
      if (g == f) return false;
      if (f < g) links.push_back({c, f});
    }
  }
  DisjointSets sets;
  for (std::size_t skip = 0; skip < links.size(); ++skip) {
    sets.reset(n);
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (i == skip) continue;
      sets.unite(links[i].a, map.partner(links[i].color, links[i].a));
    }
    if (sets.component_count() != 1) return false;
  }
  return true;
}

}  // namespace mapdelta
