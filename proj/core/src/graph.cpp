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

#include "mapdelta/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mapdelta/disjoint_sets.hpp"
#include "mapdelta/error.hpp"

namespace mapdelta {

std::size_t LabeledGraph::degree(std::size_t vertex) const {
  std::size_t d = 0;
  for (const auto& e : edges) {
    d += static_cast<std::size_t>(e.u == vertex) + static_cast<std::size_t>(e.v == vertex);
  }
  return d;
}

bool LabeledGraph::is_connected() const {
  if (vertices.empty()) return false;
  DisjointSets sets(vertices.size());
  for (const auto& e : edges) sets.unite(static_cast<std::uint32_t>(e.u), static_cast<std::uint32_t>(e.v));
  return sets.component_count() == 1;
}

const LabeledEdge* LabeledGraph::find_edge(EdgeId id) const {
  auto it = std::find_if(edges.begin(), edges.end(), [id](const LabeledEdge& e) { return e.id == id; });
  return it == edges.end() ? nullptr : &*it;
}

void LabeledGraph::check_well_formed() const {
  std::set<EdgeId> seen;
  for (const auto& e : edges) {
    if (e.id.value == 0) throw Error(ErrorCode::LabelMismatch, "edge ids start at 1");
    if (!seen.insert(e.id).second) {
      throw Error(ErrorCode::LabelMismatch, "edge " + std::to_string(e.id.value) + " appears twice");
    }
    if (e.u >= vertices.size() || e.v >= vertices.size()) {
      throw Error(ErrorCode::LabelMismatch,
                  "edge " + std::to_string(e.id.value) + " has an undeclared endpoint");
    }
  }
}

bool label_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

  std::map<EdgeId, const LabeledEdge*> in_b;
  for (const auto& e : b.edges) in_b.emplace(e.id, &e);
  for (const auto& e : a.edges) {
    auto it = in_b.find(e.id);
    if (it == in_b.end() || it->second->is_loop() != e.is_loop()) return false;
  }

  std::vector<std::vector<const LabeledEdge*>> incident(a.vertex_count());
  for (const auto& e : a.edges) {
    incident[e.u].push_back(&e);
    if (!e.is_loop()) incident[e.v].push_back(&e);
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> forward(a.vertex_count(), kUnset);
  std::vector<std::size_t> backward(b.vertex_count(), kUnset);

  // Binds `seed -> image` and propagates through the component of `seed`.
  // Within a component every other binding is forced, so a conflict means
  // the seed was wrong. Touched vertices are recorded for rollback.
  auto propagate = [&](std::size_t seed, std::size_t image, std::vector<std::size_t>& touched) {
    auto bind = [&](std::size_t x, std::size_t y) {
      if (forward[x] == kUnset && backward[y] == kUnset) {
        forward[x] = y;
        backward[y] = x;
        touched.push_back(x);
        return true;
      }
      return forward[x] == y && backward[y] == x;
    };
    if (!bind(seed, image)) return false;
    std::vector<std::size_t> stack{seed};
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const LabeledEdge* ea : incident[x]) {
        const LabeledEdge& eb = *in_b.at(ea->id);
        std::size_t fx = forward[x];
        if (fx != eb.u && fx != eb.v) return false;
        std::size_t other = ea->u == x ? ea->v : ea->u;
        std::size_t other_image = fx == eb.u ? eb.v : eb.u;
        bool fresh = forward[other] == kUnset;
        if (!bind(other, other_image)) return false;
        if (fresh) stack.push_back(other);
      }
    }
    return true;
  };

  for (std::size_t x = 0; x < a.vertex_count(); ++x) {
    if (forward[x] != kUnset || incident[x].empty()) continue;
    const LabeledEdge& eb = *in_b.at(incident[x].front()->id);
    bool matched = false;
    for (std::size_t image : {eb.u, eb.v}) {
      std::vector<std::size_t> touched;
      if (propagate(x, image, touched)) {
        matched = true;
        break;
      }
      for (std::size_t t : touched) {
        backward[forward[t]] = kUnset;
        forward[t] = kUnset;
      }
    }
    if (!matched) return false;
  }

  // Isolated vertices pair up with whatever is left.
  std::size_t free_a = static_cast<std::size_t>(std::count(forward.begin(), forward.end(), kUnset));
  std::size_t free_b = static_cast<std::size_t>(std::count(backward.begin(), backward.end(), kUnset));
  if (free_a != free_b) return false;
  for (std::size_t y = 0; y < b.vertex_count(); ++y) {
    if (backward[y] == kUnset && b.degree(y) != 0) return false;
  }
  return true;
}

}  // namespace mapdelta
