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

#include "mapdelta/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <string>

#include "mapdelta/error.hpp"

namespace mapdelta {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string describe(EdgeEnd h) { return std::to_string(h.edge.value) + (h.end == 0 ? "a" : "b"); }

// The (at most two) dual vertices each edge label touches.
std::map<EdgeId, std::array<std::size_t, 2>> face_incidence(const LabeledGraph& g, const LabeledGraph& gstar) {
  g.check_well_formed();
  gstar.check_well_formed();
  if (g.edge_count() != gstar.edge_count()) {
    throw Error(ErrorCode::LabelMismatch, "graph and dual have different edge counts");
  }
  std::map<EdgeId, std::array<std::size_t, 2>> faces;
  for (const auto& e : gstar.edges) faces[e.id] = {e.u, e.v};
  for (const auto& e : g.edges) {
    if (!faces.contains(e.id)) {
      throw Error(ErrorCode::LabelMismatch, "edge " + std::to_string(e.id.value) + " is missing from the dual");
    }
  }
  return faces;
}

std::vector<std::vector<EdgeEnd>> ends_by_vertex(const LabeledGraph& g) {
  std::vector<std::vector<EdgeEnd>> ends(g.vertex_count());
  for (const auto& e : g.edges) {
    ends[e.u].push_back({e.id, 0});
    ends[e.v].push_back({e.id, 1});
  }
  for (auto& list : ends) std::sort(list.begin(), list.end());
  return ends;
}

// Distinct dual vertices shared by the two edges.
std::vector<std::size_t> shared_faces(const std::array<std::size_t, 2>& a, const std::array<std::size_t, 2>& b) {
  std::vector<std::size_t> out;
  for (std::size_t f : {a[0], a[1]}) {
    if ((f == b[0] || f == b[1]) && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

}  // namespace

RotationSystem recover_rotations(const LabeledGraph& g, const LabeledGraph& gstar) {
  const auto faces = face_incidence(g, gstar);
  const auto ends = ends_by_vertex(g);

  RotationSystem system;
  system.rotations.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& at = ends[v];
    const std::string where = "vertex " + g.vertices[v];
    if (at.size() < 3) {
      throw Error(ErrorCode::AmbiguousCorners,
                  where + " has degree " + std::to_string(at.size()) + "; corners need degree three or more");
    }

    // Corner graph on the ends at v.
    std::vector<std::vector<std::size_t>> next(at.size());
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size(); ++j) {
        auto common = shared_faces(faces.at(at[i].edge), faces.at(at[j].edge));
        if (common.size() > 1 || (!common.empty() && at[i].edge == at[j].edge)) {
          throw Error(ErrorCode::AmbiguousCorners, where + ": ends " + describe(at[i]) + " and " +
                                                       describe(at[j]) + " share more than one face");
        }
        if (common.size() == 1) {
          next[i].push_back(j);
          next[j].push_back(i);
        }
      }
    }
    for (std::size_t i = 0; i < at.size(); ++i) {
      if (next[i].size() != 2) {
        throw Error(ErrorCode::AmbiguousCorners, where + ": end " + describe(at[i]) + " has " +
                                                     std::to_string(next[i].size()) + " corner neighbours, not 2");
      }
    }

    // Ends are sorted, so index 0 is the smallest and next[0][0] the smaller
    // neighbour.
    auto& rotation = system.rotations[v];
    std::size_t prev = kNone;
    std::size_t cur = 0;
    do {
      rotation.push_back(at[cur]);
      std::size_t step = (prev == kNone || next[cur][0] != prev) ? next[cur][0] : next[cur][1];
      prev = cur;
      cur = step;
    } while (cur != 0 && rotation.size() <= at.size());
    if (rotation.size() != at.size()) {
      throw Error(ErrorCode::AmbiguousCorners, where + ": corner graph splits into several cycles");
    }
  }
  return system;
}

CombinatorialMap build_map(const LabeledGraph& g, const LabeledGraph& gstar, const RotationSystem& rotations) {
  const auto faces = face_incidence(g, gstar);
  const std::size_t m = g.edge_count();
  for (const auto& e : g.edges) {
    if (e.id.value < 1 || e.id.value > m) {
      throw Error(ErrorCode::LabelMismatch, "edge ids must be exactly 1.." + std::to_string(m));
    }
  }
  if (rotations.rotations.size() != g.vertex_count()) {
    throw Error(ErrorCode::LabelMismatch, "rotation system does not cover every vertex");
  }

  auto flag = [](EdgeEnd h, unsigned side) { return static_cast<Flag>(4 * (h.edge.value - 1) + 2 * h.end + side); };
  // Face of each flag; side 0 is the corner before the end, side 1 after.
  std::vector<std::size_t> face_of(4 * m, kNone);

  MapPairings pairs;
  pairs.flag_count = 4 * m;
  std::vector<int> placed(2 * m, 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& rotation = rotations.rotations[v];
    for (std::size_t i = 0; i < rotation.size(); ++i) {
      EdgeEnd h = rotation[i];
      EdgeEnd k = rotation[(i + 1) % rotation.size()];
      const LabeledEdge* e = g.find_edge(h.edge);
      if (e == nullptr || h.end > 1 || (h.end == 0 ? e->u : e->v) != v) {
        throw Error(ErrorCode::LabelMismatch, "rotation at vertex " + g.vertices[v] + " lists a foreign end");
      }
      ++placed[2 * (h.edge.value - 1) + h.end];
      auto common = shared_faces(faces.at(h.edge), faces.at(k.edge));
      if (common.size() != 1) {
        throw Error(ErrorCode::AmbiguousCorners, "corner " + describe(h) + "|" + describe(k) + " at vertex " +
                                                     g.vertices[v] + " does not lie in exactly one face");
      }
      pairs.black.emplace_back(flag(h, 1), flag(k, 0));
      face_of[flag(h, 1)] = common.front();
      face_of[flag(k, 0)] = common.front();
    }
  }
  if (std::any_of(placed.begin(), placed.end(), [](int c) { return c != 1; })) {
    throw Error(ErrorCode::LabelMismatch, "every edge-end must appear in exactly one rotation");
  }

  for (std::uint32_t id = 1; id <= m; ++id) {
    const EdgeEnd a{EdgeId{id}, 0}, b{EdgeId{id}, 1};
    pairs.red.emplace_back(flag(a, 0), flag(a, 1));
    pairs.red.emplace_back(flag(b, 0), flag(b, 1));
    for (EdgeEnd h : {a, b}) {
      if (face_of[flag(h, 0)] == face_of[flag(h, 1)]) {
        throw Error(ErrorCode::AmbiguousGluing,
                    "both sides of edge " + std::to_string(id) + " lie in the same face");
      }
    }
    for (unsigned side = 0; side < 2; ++side) {
      std::size_t face = face_of[flag(a, side)];
      if (face_of[flag(b, 0)] == face) {
        pairs.green.emplace_back(flag(a, side), flag(b, 0));
      } else if (face_of[flag(b, 1)] == face) {
        pairs.green.emplace_back(flag(a, side), flag(b, 1));
      } else {
        throw Error(ErrorCode::ValidationFailed,
                    "the two ends of edge " + std::to_string(id) + " see different faces");
      }
    }
  }

  CombinatorialMap map;
  try {
    map = validate_map(pairs);
  } catch (const Error& err) {
    throw Error(ErrorCode::ValidationFailed, err.what());
  }
  if (!label_isomorphic(underlying_graph(map), g)) {
    throw Error(ErrorCode::ValidationFailed, "rebuilt map does not encode the input graph");
  }
  if (!label_isomorphic(dual_graph(map), gstar)) {
    throw Error(ErrorCode::ValidationFailed, "rebuilt map does not encode the input dual");
  }
  return map;
}

bool maps_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
  if (a.flag_count() != b.flag_count() || a.edge_count() != b.edge_count()) return false;
  const std::size_t n = a.flag_count();
  constexpr Flag kUnset = std::numeric_limits<Flag>::max();

  // Flag 0 must land in the quadrilateral carrying the same label; the rest
  // of the bijection is forced by connectivity.
  for (Flag image : b.quadrilateral(a.edge_of(0)).flags) {
    std::vector<Flag> forward(n, kUnset), backward(n, kUnset);
    forward[0] = image;
    backward[image] = 0;
    std::vector<Flag> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      Flag f = stack.back();
      stack.pop_back();
      if (a.edge_of(f) != b.edge_of(forward[f])) {
        ok = false;
        break;
      }
      for (Color c : {Color::Red, Color::Green, Color::Black}) {
        Flag x = a.partner(c, f);
        Flag y = b.partner(c, forward[f]);
        if (forward[x] == kUnset && backward[y] == kUnset) {
          forward[x] = y;
          backward[y] = x;
          stack.push_back(x);
        } else if (forward[x] != y || backward[y] != x) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

bool roundtrip_check(const CombinatorialMap& map) {
  auto g = underlying_graph(map);
  auto gstar = dual_graph(map);
  auto rebuilt = build_map(g, gstar, recover_rotations(g, gstar));
  return maps_isomorphic(map, rebuilt);
}

}  // namespace mapdelta
