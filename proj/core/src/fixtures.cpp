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

#include "mapdelta/fixtures.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mapdelta {
namespace {

// The three one-edge maps share R and G and differ only in B.
NamedMap one_edge(std::string name, std::vector<FlagPair> black) {
  MapPairings p;
  p.flag_count = 4;
  p.red = {{0, 1}, {2, 3}};
  p.green = {{1, 2}, {3, 0}};
  p.black = std::move(black);
  return {std::move(name), validate_map(p)};
}

// Complete graph on `n` vertices with edges (i, j), i < j, in lexicographic
// order; `neighbours[v]` is the rotation at v as a list of neighbours.
SignedRotationSystem complete_graph_embedding(std::size_t n, const std::vector<std::vector<std::size_t>>& neighbours) {
  SignedRotationSystem s;
  s.vertex_count = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) s.edges.emplace_back(i, j);
  }
  s.twisted.assign(s.edges.size(), false);
  s.rotations.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : neighbours[v]) {
      auto key = std::minmax(v, w);
      auto it = std::find(s.edges.begin(), s.edges.end(), std::pair<std::size_t, std::size_t>(key.first, key.second));
      auto e = static_cast<std::uint32_t>(it - s.edges.begin());
      s.rotations[v].push_back({e, static_cast<std::uint8_t>(v == key.first ? 0 : 1)});
    }
  }
  return s;
}

NamedMap theta() {
  SignedRotationSystem s;
  s.vertex_count = 2;
  s.edges = {{0, 1}, {0, 1}, {0, 1}};
  s.twisted = {false, false, false};
  s.rotations = {{{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {2, 1}, {1, 1}}};
  return {"theta", map_from_rotation_system(s)};
}

NamedMap torus_one_vertex() {
  SignedRotationSystem s;
  s.vertex_count = 1;
  s.edges = {{0, 0}, {0, 0}};
  s.twisted = {false, false};
  s.rotations = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  return {"torus1v", map_from_rotation_system(s)};
}

NamedMap k4_sphere() {
  return {"k4sphere", map_from_rotation_system(complete_graph_embedding(4, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}))};
}

NamedMap k5_torus() {
  return {"k5torus", map_from_rotation_system(complete_graph_embedding(
                         5, {{1, 2, 3, 4}, {0, 2, 4, 3}, {0, 3, 1, 4}, {0, 4, 2, 1}, {0, 1, 3, 2}}))};
}

}  // namespace

std::vector<std::string> fixture_names() { return {"loop", "bridge", "crosscap", "theta", "torus1v", "k4sphere", "k5torus"}; }

std::optional<NamedMap> find_fixture(std::string_view name) {
  if (name == "loop") return one_edge("loop", {{1, 2}, {3, 0}});
  if (name == "bridge") return one_edge("bridge", {{0, 1}, {2, 3}});
  if (name == "crosscap") return one_edge("crosscap", {{0, 2}, {1, 3}});
  if (name == "theta") return theta();
  if (name == "torus1v") return torus_one_vertex();
  if (name == "k4sphere") return k4_sphere();
  if (name == "k5torus") return k5_torus();
  return std::nullopt;
}

NamedMap fixture(std::string_view name) {
  auto found = find_fixture(name);
  if (!found) throw std::out_of_range("no fixture named '" + std::string(name) + "'");
  return *std::move(found);
}

SignedRotationSystem random_rotation_system(std::uint64_t seed, std::size_t max_edges) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };

  max_edges = std::max<std::size_t>(max_edges, 1);
  SignedRotationSystem s;
  const std::size_t m = uniform(1, max_edges);
  s.vertex_count = uniform(1, m + 1);
  // Random spanning tree first, then arbitrary extra edges (loops allowed).
  for (std::size_t v = 1; v < s.vertex_count; ++v) s.edges.emplace_back(uniform(0, v - 1), v);
  while (s.edges.size() < m) s.edges.emplace_back(uniform(0, s.vertex_count - 1), uniform(0, s.vertex_count - 1));
  std::shuffle(s.edges.begin(), s.edges.end(), rng);

  s.rotations.resize(s.vertex_count);
  for (std::uint32_t e = 0; e < s.edges.size(); ++e) {
    s.rotations[s.edges[e].first].push_back({e, 0});
    s.rotations[s.edges[e].second].push_back({e, 1});
  }
  for (auto& rotation : s.rotations) std::shuffle(rotation.begin(), rotation.end(), rng);
  for (std::size_t e = 0; e < s.edges.size(); ++e) s.twisted.push_back(uniform(0, 1) == 1);
  return s;
}

NamedMap random_map(std::uint64_t seed, std::size_t max_edges) {
  return {"random-" + std::to_string(seed), map_from_rotation_system(random_rotation_system(seed, max_edges))};
}

}  // namespace mapdelta
