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

// Conversions between library types and the oracle's plain containers.

#pragma once

#include <mapdelta/graph.hpp>
#include <mapdelta/map.hpp>
#include <mapdelta/set_family.hpp>

#include "oracle.hpp"

namespace testing {

inline oracle::Flags to_flags(const mapdelta::CombinatorialMap& map) {
  oracle::Flags out;
  for (mapdelta::Flag f = 0; f < map.flag_count(); ++f) {
    out.r.push_back(static_cast<int>(map.red(f)));
    out.g.push_back(static_cast<int>(map.green(f)));
    out.b.push_back(static_cast<int>(map.black(f)));
  }
  return out;
}

inline oracle::Family to_family(const mapdelta::SetFamily& family) {
  oracle::Family out;
  for (mapdelta::EdgeSet s : family.members()) {
    oracle::Set set;
    for (auto id : mapdelta::elements(s)) set.insert(static_cast<int>(id.value));
    out.insert(set);
  }
  return out;
}

inline mapdelta::SetFamily from_family(const oracle::Family& family) {
  std::vector<mapdelta::EdgeSet> members;
  for (const auto& s : family) {
    mapdelta::EdgeSet mask = 0;
    for (int x : s) mask |= mapdelta::EdgeSet{1} << (x - 1);
    members.push_back(mask);
  }
  return mapdelta::SetFamily(0, std::move(members));
}

inline std::vector<oracle::Edge> to_edges(const mapdelta::LabeledGraph& g) {
  std::vector<oracle::Edge> out;
  for (const auto& e : g.edges) {
    out.push_back({static_cast<int>(e.id.value), static_cast<int>(e.u), static_cast<int>(e.v)});
  }
  return out;
}

}  // namespace testing
