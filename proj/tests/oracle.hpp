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

// Test-only reference implementations. Nothing here calls into the library's
// enumeration, union-find or checkers: families are std::set<std::set<int>>,
// connectivity is plain graph search, and spanning trees are counted with the
// matrix-tree theorem.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::set<int>;
using Family = std::set<Set>;

// Three involutions as partner arrays.
struct Flags {
  std::vector<int> r, g, b;
  int size() const { return static_cast<int>(r.size()); }
};

inline std::vector<std::vector<int>> components(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

// R/G 4-cycles ordered by smallest flag; quad[f] is the 1-based id of f's.
inline std::vector<int> quad_ids(const Flags& m) {
  std::vector<int> id(m.size(), 0);
  int next = 0;
  for (int f = 0; f < m.size(); ++f) {
    if (id[f]) continue;
    ++next;
    int x = f;
    bool red = true;
    do {
      id[x] = next;
      x = red ? m.r[x] : m.g[x];
      red = !red;
    } while (x != f || !red);
  }
  return id;
}

inline int quad_count(const Flags& m) {
  auto id = quad_ids(m);
  return *std::max_element(id.begin(), id.end());
}

// Subgraph for a green-set bitmask plus optional extra colour.
inline std::vector<std::vector<int>> selection_adjacency(const Flags& m, std::uint32_t green_mask, char extra) {
  auto id = quad_ids(m);
  std::vector<std::vector<int>> adj(m.size());
  for (int f = 0; f < m.size(); ++f) {
    adj[f].push_back(m.b[f]);
    bool green = (green_mask >> (id[f] - 1)) & 1u;
    adj[f].push_back(green ? m.g[f] : m.r[f]);
    if (extra == 'R') adj[f].push_back(m.r[f]);
    if (extra == 'G') adj[f].push_back(m.g[f]);
  }
  return adj;
}

inline Set mask_to_set(std::uint32_t mask) {
  Set s;
  for (int i = 0; i < 32; ++i) {
    if ((mask >> i) & 1u) s.insert(i + 1);
  }
  return s;
}

// Walks the 2-regular subgraph from flag 0 and reports whether it visits all.
inline bool hamiltonian_walk(const Flags& m, std::uint32_t green_mask) {
  auto id = quad_ids(m);
  int prev = -1, x = 0, steps = 0;
  bool use_black = true;
  do {
    int next = use_black ? m.b[x] : (((green_mask >> (id[x] - 1)) & 1u) ? m.g[x] : m.r[x]);
    prev = x;
    x = next;
    use_black = !use_black;
    ++steps;
  } while (x != 0 || !use_black);
  (void)prev;
  return steps == m.size();
}

inline Family gamma_family(const Flags& m) {
  Family out;
  const int q = quad_count(m);
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    if (hamiltonian_walk(m, mask)) out.insert(mask_to_set(mask));
  }
  return out;
}

inline Family k_family(const Flags& m) {
  Family out;
  const int q = quad_count(m);
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    if (components(m.size(), selection_adjacency(m, mask, 'R')).size() == 1 &&
        components(m.size(), selection_adjacency(m, mask, 'G')).size() == 1) {
      out.insert(mask_to_set(mask));
    }
  }
  return out;
}

inline Set sym_diff(const Set& a, const Set& b) {
  Set out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool symmetric_exchange(const Family& f) {
  for (const auto& f1 : f) {
    for (const auto& f2 : f) {
      Set d = sym_diff(f1, f2);
      for (int x : d) {
        bool ok = false;
        for (int y : d) {
          Set pair{x, y};
          if (f.count(sym_diff(f1, pair))) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

inline bool basis_exchange(const Family& f) {
  for (const auto& b1 : f) {
    for (const auto& b2 : f) {
      if (b1.size() != b2.size()) return false;
      for (int x : b1) {
        if (b2.count(x)) continue;
        bool ok = false;
        for (int y : b2) {
          if (b1.count(y)) continue;
          Set t = b1;
          t.erase(x);
          t.insert(y);
          if (f.count(t)) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// Edges as (id, u, v).
struct Edge {
  int id, u, v;
};

// Spanning trees by BFS connectivity over every subset of non-loop edges.
inline Family spanning_trees(int vertices, const std::vector<Edge>& edges) {
  Family out;
  const int m = static_cast<int>(edges.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != vertices - 1) continue;
    std::vector<std::vector<int>> adj(vertices);
    Set ids;
    bool loop = false;
    for (int i = 0; i < m; ++i) {
      if (!((mask >> i) & 1u)) continue;
      if (edges[i].u == edges[i].v) loop = true;
      adj[edges[i].u].push_back(edges[i].v);
      adj[edges[i].v].push_back(edges[i].u);
      ids.insert(edges[i].id);
    }
    if (!loop && components(vertices, adj).size() == 1) out.insert(ids);
  }
  return out;
}

// Kirchhoff: any cofactor of the Laplacian (loops ignored).
inline long long matrix_tree_count(int vertices, const std::vector<Edge>& edges) {
  if (vertices == 1) return 1;
  std::vector<std::vector<double>> lap(vertices, std::vector<double>(vertices, 0.0));
  for (const auto& e : edges) {
    if (e.u == e.v) continue;
    lap[e.u][e.u] += 1;
    lap[e.v][e.v] += 1;
    lap[e.u][e.v] -= 1;
    lap[e.v][e.u] -= 1;
  }
  const int n = vertices - 1;
  double det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(lap[r][c]) > std::abs(lap[pivot][c])) pivot = r;
    }
    if (std::abs(lap[pivot][c]) < 1e-12) return 0;
    if (pivot != c) {
      std::swap(lap[pivot], lap[c]);
      det = -det;
    }
    det *= lap[c][c];
    for (int r = c + 1; r < n; ++r) {
      double k = lap[r][c] / lap[c][c];
      for (int j = c; j < n; ++j) lap[r][j] -= k * lap[c][j];
    }
  }
  return std::llround(det);
}

// Odd cycle exists iff (v, even) reaches (v, odd) in the parity double cover.
inline bool has_odd_cycle(const Flags& m) {
  const int n = m.size();
  std::vector<std::vector<int>> adj(2 * n);
  for (int f = 0; f < n; ++f) {
    for (int y : {m.r[f], m.g[f], m.b[f]}) {
      adj[2 * f].push_back(2 * y + 1);
      adj[2 * f + 1].push_back(2 * y);
    }
  }
  auto comps = components(2 * n, adj);
  for (const auto& c : comps) {
    std::set<int> in(c.begin(), c.end());
    if (in.count(0) && in.count(1)) return true;
  }
  return false;
}

// Alternating-cycle count for two involutions.
inline int cycle_count(const std::vector<int>& p, const std::vector<int>& q) {
  const int n = static_cast<int>(p.size());
  std::vector<std::vector<int>> adj(n);
  for (int f = 0; f < n; ++f) {
    adj[f].push_back(p[f]);
    adj[f].push_back(q[f]);
  }
  return static_cast<int>(components(n, adj).size());
}

}  // namespace oracle
