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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include <mapdelta/error.hpp>
#include <mapdelta/fixtures.hpp>
#include <mapdelta/io.hpp>
#include <mapdelta/reconstruct.hpp>

using namespace mapdelta;

namespace {

LabeledGraph data_graph(const std::string& file) {
  std::ifstream in(std::string(MAPDELTA_DATA_DIR) + "/graphs/" + file);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

ErrorCode rebuild_error(const CombinatorialMap& m) {
  try {
    auto g = underlying_graph(m);
    auto d = dual_graph(m);
    build_map(g, d, recover_rotations(g, d));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("reconstruction unexpectedly succeeded");
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST_CASE("roundtrip on sphere, torus and theta") {
  for (const char* name : {"k4sphere", "k5torus", "theta"}) {
    CAPTURE(name);
    CHECK(roundtrip_check(fixture(name).map));
  }
}

TEST_CASE("rebuilt K5 lives on the torus") {
  auto g = data_graph("k5torus.graph");
  auto d = data_graph("k5torus-dual.graph");
  auto rebuilt = build_map(g, d, recover_rotations(g, d));
  CHECK(euler_characteristic(rebuilt) == 0);
  CHECK(is_orientable(rebuilt));
  CHECK(rebuilt.edge_count() == 10);
  CHECK(maps_isomorphic(rebuilt, fixture("k5torus").map));
  CHECK_FALSE(maps_isomorphic(rebuilt, fixture("k4sphere").map));
}

TEST_CASE("recovered rotations are deterministic") {
  auto g = data_graph("k4sphere.graph");
  auto d = data_graph("k4sphere-dual.graph");
  auto r = recover_rotations(g, d);
  CHECK(r == recover_rotations(g, d));
  REQUIRE(r.rotations.size() == 4);
  for (const auto& rot : r.rotations) {
    CHECK(rot.size() == 3);
    CHECK(rot.front() == *std::min_element(rot.begin(), rot.end()));
  }
}

TEST_CASE("degenerate inputs report ambiguity") {
  CHECK(rebuild_error(fixture("loop").map) == ErrorCode::AmbiguousCorners);
  CHECK(rebuild_error(fixture("bridge").map) == ErrorCode::AmbiguousCorners);
  CHECK_THROWS_AS(roundtrip_check(fixture("loop").map), Error);
  CHECK_THROWS_AS(roundtrip_check(fixture("bridge").map), Error);

  auto g = data_graph("bridge.graph");
  auto d = data_graph("bridge-dual.graph");
  RotationSystem manual{{{EdgeEnd{EdgeId{1}, 0}}, {EdgeEnd{EdgeId{1}, 1}}}};
  try {
    build_map(g, d, manual);
    FAIL("expected AmbiguousGluing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbiguousGluing);
  }
}

TEST_CASE("mismatched labels are rejected") {
  auto g = data_graph("k4sphere.graph");
  auto d = data_graph("k5torus-dual.graph");
  try {
    recover_rotations(g, d);
    FAIL("expected LabelMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LabelMismatch);
  }
}

TEST_CASE("isomorphism preserves edge labels but not flag names") {
  auto m = fixture("k4sphere").map;
  auto p = m.pairings();
  // Rotating flags inside each quadrilateral keeps every edge id in place.
  std::vector<Flag> inside(p.flag_count);
  for (const auto& q : m.quadrilaterals()) {
    for (std::size_t i = 0; i < 4; ++i) inside[q.flags[i]] = q.flags[(i + 1) % 4];
  }
  // A cyclic shift by five moves flags across quadrilaterals.
  std::vector<Flag> across(p.flag_count);
  for (Flag f = 0; f < p.flag_count; ++f) across[f] = static_cast<Flag>((f + 5) % p.flag_count);

  auto relabel = [&p](const std::vector<Flag>& sigma) {
    MapPairings q{p.flag_count, {}, {}, {}};
    for (auto [a, b] : p.red) q.red.emplace_back(sigma[a], sigma[b]);
    for (auto [a, b] : p.green) q.green.emplace_back(sigma[a], sigma[b]);
    for (auto [a, b] : p.black) q.black.emplace_back(sigma[a], sigma[b]);
    return validate_map(q);
  };
  auto same_labels = relabel(inside);
  CHECK_FALSE(same_labels == m);
  CHECK(maps_isomorphic(m, same_labels));
  CHECK(label_isomorphic(underlying_graph(relabel(across)), underlying_graph(m)) ==
        maps_isomorphic(m, relabel(across)));
  CHECK_FALSE(maps_isomorphic(fixture("loop").map, fixture("crosscap").map));
}
