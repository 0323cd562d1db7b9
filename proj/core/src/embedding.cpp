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

#include "mapdelta/embedding.hpp"

#include <string>

#include "mapdelta/error.hpp"

namespace mapdelta {

CombinatorialMap map_from_rotation_system(const SignedRotationSystem& system) {
  const std::size_t m = system.edges.size();
  if (system.rotations.size() != system.vertex_count || system.twisted.size() != m) {
    throw Error(ErrorCode::LabelMismatch, "rotation system sizes disagree with its graph");
  }
  auto flag = [](std::uint32_t e, unsigned end, unsigned side) { return static_cast<Flag>(4 * e + 2 * end + side); };

  MapPairings pairs;
  pairs.flag_count = 4 * m;
  for (std::uint32_t e = 0; e < m; ++e) {
    for (unsigned end = 0; end < 2; ++end) pairs.red.emplace_back(flag(e, end, 0), flag(e, end, 1));
    // An untwisted edge swaps sides as it is traversed, matching two
    // rotations read in the same sense.
    if (system.twisted[e]) {
      pairs.green.emplace_back(flag(e, 0, 0), flag(e, 1, 0));
      pairs.green.emplace_back(flag(e, 0, 1), flag(e, 1, 1));
    } else {
      pairs.green.emplace_back(flag(e, 0, 0), flag(e, 1, 1));
      pairs.green.emplace_back(flag(e, 0, 1), flag(e, 1, 0));
    }
  }

  std::vector<int> placed(2 * m, 0);
  for (std::size_t v = 0; v < system.vertex_count; ++v) {
    const auto& rotation = system.rotations[v];
    for (std::size_t i = 0; i < rotation.size(); ++i) {
      HalfEdge h = rotation[i];
      if (h.edge >= m || h.end > 1) throw Error(ErrorCode::LabelMismatch, "rotation names an unknown half edge");
      std::size_t at = h.end == 0 ? system.edges[h.edge].first : system.edges[h.edge].second;
      if (at != v) {
        throw Error(ErrorCode::LabelMismatch,
                    "half edge of edge " + std::to_string(h.edge) + " listed at the wrong vertex");
      }
      ++placed[2 * h.edge + h.end];
      HalfEdge next = rotation[(i + 1) % rotation.size()];
      pairs.black.emplace_back(flag(h.edge, h.end, 1), flag(next.edge, next.end, 0));
    }
  }
  for (int count : placed) {
    if (count != 1) throw Error(ErrorCode::LabelMismatch, "every half edge must appear in exactly one rotation");
  }
  return validate_map(pairs);
}

}  // namespace mapdelta
