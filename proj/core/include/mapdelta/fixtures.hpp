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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapdelta/embedding.hpp"
#include "mapdelta/io.hpp"

namespace mapdelta {

// Built-in corpus:
//   loop      one vertex, one loop, sphere
//   bridge    two vertices, one edge, sphere
//   crosscap  one vertex, one twisted loop, projective plane
//   theta     two vertices, three parallel edges, sphere
//   torus1v   one vertex, two loops, torus
//   k4sphere  K4 drawn in the plane
//   k5torus   K5 on the torus with dual K5
std::vector<std::string> fixture_names();
std::optional<NamedMap> find_fixture(std::string_view name);
// Throws std::out_of_range for unknown names.
NamedMap fixture(std::string_view name);

/// A random connected embedded multigraph with loops: 1..max_edges edges,
/// random rotations and random twists. Deterministic in `seed`.
SignedRotationSystem random_rotation_system(std::uint64_t seed, std::size_t max_edges);
NamedMap random_map(std::uint64_t seed, std::size_t max_edges);

}  // namespace mapdelta
