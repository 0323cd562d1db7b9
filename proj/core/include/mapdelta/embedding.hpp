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

#include <cstdint>
#include <utility>
#include <vector>

#include "mapdelta/map.hpp"

namespace mapdelta {

/// One end of edge `edge` (0-based index into SignedRotationSystem::edges).
/// End 0 sits at edges[edge].first, end 1 at edges[edge].second.
struct HalfEdge {
  std::uint32_t edge = 0;
  std::uint8_t end = 0;

  friend bool operator==(HalfEdge, HalfEdge) = default;
};

/// A general (possibly non-orientable) embedding: a cyclic order of half
/// edges around each vertex and a twist bit per edge.
struct SignedRotationSystem {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<HalfEdge>> rotations;
  std::vector<bool> twisted;
};

/// Builds the map graph of an embedding. Edge i becomes flags 4i..4i+3, so
/// EdgeId i+1 labels edge i. Flag 4i + 2s + t is end s of edge i on side t,
/// where side 1 follows the half edge in its vertex rotation. Throws Error
/// when the rotations do not list every half edge exactly once at its own
/// vertex.
CombinatorialMap map_from_rotation_system(const SignedRotationSystem& system);

}  // namespace mapdelta
