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

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mapdelta/graph.hpp"

namespace mapdelta {

using Flag = std::uint32_t;
using FlagPair = std::pair<Flag, Flag>;

enum class Color : std::uint8_t { Red, Green, Black };

/// Which two colour classes alternate along a cycle. RB cycles are the
/// vertices of the encoded graph, RG cycles its edges, GB cycles its faces.
enum class CyclePair : std::uint8_t { RB, RG, GB };

/// Raw input to validate_map: three colour classes listed as flag pairs.
struct MapPairings {
  std::size_t flag_count = 0;
  std::vector<FlagPair> red;
  std::vector<FlagPair> green;
  std::vector<FlagPair> black;
};

/// An R/G 4-cycle. Flags are listed in cycle order starting from the
/// smallest: f, R(f), G(R(f)), G(f). flags[0] and flags[1] sit at one end of
/// the edge, flags[2] and flags[3] at the other.
struct Quadrilateral {
  EdgeId id;
  std::array<Flag, 4> flags{};
  friend bool operator==(const Quadrilateral&, const Quadrilateral&) = default;
};

/// A validated map graph: three fixed-point-free involutions on the flags
/// 0..n-1 where R and G generate 4-cycles and R, G, B together connect
/// everything. Immutable once constructed; build one with validate_map().
class CombinatorialMap {
 public:
  std::size_t flag_count() const noexcept { return red_.size(); }
  std::size_t edge_count() const noexcept { return quads_.size(); }

  Flag red(Flag f) const { return red_[f]; }
  Flag green(Flag f) const { return green_[f]; }
  Flag black(Flag f) const { return black_[f]; }
  Flag partner(Color c, Flag f) const;

  std::span<const Flag> involution(Color c) const;

  /// Canonically numbered: EdgeId k is the quadrilateral with the k-th
  /// smallest minimum flag.
  std::span<const Quadrilateral> quadrilaterals() const noexcept { return quads_; }
  const Quadrilateral& quadrilateral(EdgeId id) const { return quads_[id.value - 1]; }
  EdgeId edge_of(Flag f) const { return EdgeId{edge_of_[f]}; }

  // Three-colour pairings, each pair (a, b) with a < b, sorted.
  MapPairings pairings() const;

  friend bool operator==(const CombinatorialMap&, const CombinatorialMap&) = default;

 private:
  friend CombinatorialMap validate_map(const MapPairings& input);

  std::vector<Flag> red_;
  std::vector<Flag> green_;
  std::vector<Flag> black_;
  std::vector<Quadrilateral> quads_;
  std::vector<std::uint32_t> edge_of_;
};

/// Checks the map axioms in order (involutions, fixed points, red/green
/// parallels, 4-cycles, connectivity) and throws Error with the code of the
/// first one violated.
CombinatorialMap validate_map(const MapPairings& input);

std::span<const Quadrilateral> quadrilaterals(const CombinatorialMap& map);

/// Alternating cycles of the two colours, each starting at its smallest flag
/// and stepping with the first colour of the pair. Cycles are sorted by that
/// smallest flag.
std::vector<std::vector<Flag>> orbit_cycles(const CombinatorialMap& map, CyclePair pair);

/// Index of the RB (resp. GB) cycle containing each flag, numbered as in
/// orbit_cycles.
std::vector<std::uint32_t> cycle_index(const CombinatorialMap& map, CyclePair pair);

/// The graph (V, E): vertices are RB cycles named v1, v2, ... and each
/// quadrilateral joins the cycles of its two ends.
LabeledGraph underlying_graph(const CombinatorialMap& map);

/// The geometric dual (V*, E): vertices are GB cycles named f1, f2, ... and
/// each quadrilateral joins the cycles of its two sides.
LabeledGraph dual_graph(const CombinatorialMap& map);

/// |V| - |E| + |V*|.
int euler_characteristic(const CombinatorialMap& map);

/// Bipartiteness of the flag graph.
bool is_orientable(const CombinatorialMap& map);

/// Every flag has three distinct edges and deleting any one edge of the flag
/// graph leaves it connected. Holds for every valid map.
bool is_edge_two_connected(const CombinatorialMap& map);

}  // namespace mapdelta
