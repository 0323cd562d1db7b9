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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mapdelta {

/// Label of a map edge (an R/G quadrilateral). Ids are 1-based.
struct EdgeId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct LabeledEdge {
  EdgeId id;
  std::size_t u = 0;
  std::size_t v = 0;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Multigraph with loops whose edges carry EdgeIds. Used for the graph a map
/// encodes, its geometric dual, and as reconstruction input.
struct LabeledGraph {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<LabeledEdge> edges;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }

  // Loops count twice.
  std::size_t degree(std::size_t vertex) const;
  bool is_connected() const;

  // Edge with the given id, if present.
  const LabeledEdge* find_edge(EdgeId id) const;

  // Throws Error(LabelMismatch) when an id repeats or an endpoint is out of
  // range.
  void check_well_formed() const;
};

/// True when there is a vertex bijection carrying every edge of `a` to the
/// edge of `b` with the same id. Edge ids are fixed pointwise; vertex names
/// are ignored.
bool label_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace mapdelta
