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
#include <vector>

#include "mapdelta/graph.hpp"
#include "mapdelta/map.hpp"

namespace mapdelta {

/// End `end` of labelled edge `edge`: end 0 sits at LabeledEdge::u, end 1 at
/// LabeledEdge::v.
struct EdgeEnd {
  EdgeId edge;
  std::uint8_t end = 0;

  friend constexpr auto operator<=>(EdgeEnd, EdgeEnd) = default;
};

/// Cyclic order of edge-ends around every vertex of a graph, indexed like
/// LabeledGraph::vertices. Meaningful up to rotation and reflection.
struct RotationSystem {
  std::vector<std::vector<EdgeEnd>> rotations;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

/// Recovers the rotation at every vertex of `g` from the face incidences in
/// `gstar`: two ends at a vertex are neighbours in the rotation exactly when
/// their edges meet a common vertex of `gstar`. Each rotation starts at its
/// smallest end and continues towards the smaller of that end's two
/// neighbours.
///
/// Throws Error(LabelMismatch) when the graphs disagree on edge labels and
/// Error(AmbiguousCorners) when the corner graph at some vertex is not a
/// single cycle through all its ends, each adjacency witnessed by exactly one
/// face. Vertices of degree below three always fail; the recovery relies on
/// both graphs being 3-connected.
RotationSystem recover_rotations(const LabeledGraph& g, const LabeledGraph& gstar);

/// Rebuilds the map graph. Edge k contributes flags 4(k-1)..4k-1 so the
/// result numbers its quadrilaterals exactly like the input labels; edge ids
/// must therefore be 1..m. Black joins the two flags of every corner, red the
/// two flags of every edge-end, green the flags at opposite ends of an edge
/// lying in the same face.
///
/// Throws Error(AmbiguousGluing) when both corners at an edge-end lie in the
/// same face, and Error(ValidationFailed) when the result is not a valid map
/// or does not encode `g` and `gstar`.
CombinatorialMap build_map(const LabeledGraph& g, const LabeledGraph& gstar, const RotationSystem& rotations);

/// Colour- and label-preserving isomorphism of two maps: a flag bijection
/// commuting with R, G and B and sending every quadrilateral to the one with
/// the same EdgeId.
bool maps_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b);

/// Rebuilds `map` from its own underlying graph and dual and compares.
/// Reconstruction errors propagate.
bool roundtrip_check(const CombinatorialMap& map);

}  // namespace mapdelta
