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
#include <vector>

#include "mapdelta/map.hpp"
#include "mapdelta/set_family.hpp"

namespace mapdelta {

enum class PairChoice : std::uint8_t { Green, Red };

/// Which monochromatic pair of every quadrilateral a fully black 2-regular
/// subgraph keeps. Stored as the mask of green-selected EdgeIds.
class Selection {
 public:
  Selection() = default;
  Selection(std::size_t edge_count, EdgeSet green) : edge_count_(edge_count), green_(green & full_ground(edge_count)) {}

  static Selection all_green(std::size_t edge_count) { return {edge_count, full_ground(edge_count)}; }
  static Selection all_red(std::size_t edge_count) { return {edge_count, 0}; }

  std::size_t edge_count() const noexcept { return edge_count_; }
  EdgeSet green_set() const noexcept { return green_; }
  EdgeSet red_set() const { return full_ground(edge_count_) & ~green_; }

  PairChoice choice(EdgeId id) const { return contains(green_, id) ? PairChoice::Green : PairChoice::Red; }
  void flip(EdgeId id) { green_ ^= edge_bit(id); }

  friend bool operator==(const Selection&, const Selection&) = default;

 private:
  std::size_t edge_count_ = 0;
  EdgeSet green_ = 0;
};

/// A 2-regular spanning subgraph of the flag graph: every flag's black
/// partner and its partner in the chosen pair.
struct TwoFactor {
  std::vector<std::array<Flag, 2>> neighbors;

  std::size_t flag_count() const noexcept { return neighbors.size(); }
  std::vector<std::vector<Flag>> cycles() const;
};

TwoFactor selection_subgraph(const CombinatorialMap& map, const Selection& selection);

// Number of cycles of the selection subgraph.
std::size_t component_count(const CombinatorialMap& map, const Selection& selection);

bool is_fully_black_hamiltonian(const CombinatorialMap& map, const Selection& selection);

struct EnumerateOptions {
  // Largest edge count accepted before GroundSetTooLarge (capped at 24).
  std::size_t max_edges = 24;
  // Workers splitting the 2^m selections; 0 picks the hardware count.
  unsigned threads = 1;
};

inline constexpr std::size_t kMaxEnumerableEdges = 24;

/// Green-selected quadrilateral sets of all fully black Hamiltonian cycles.
SetFamily enumerate_feasible_gamma(const CombinatorialMap& map, const EnumerateOptions& options = {});

/// Green-selected quadrilateral sets of all fully black 2-regular subgraphs K
/// for which K + R and K + G are both connected.
SetFamily enumerate_feasible_k(const CombinatorialMap& map, const EnumerateOptions& options = {});

struct HamiltonianSearch {
  Selection selection;
  std::size_t initial_components = 0;
  std::size_t swaps = 0;
};

/// Starts from the all-green selection and swaps the first quadrilateral (in
/// EdgeId order) whose chosen pair straddles two components until one cycle
/// remains. Each swap merges two cycles.
HamiltonianSearch find_hamiltonian(const CombinatorialMap& map);

}  // namespace mapdelta
