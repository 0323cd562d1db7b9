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
#include <random>
#include <sstream>

#include <mapdelta/delta_matroid.hpp>
#include <mapdelta/error.hpp>
#include <mapdelta/fixtures.hpp>
#include <mapdelta/io.hpp>
#include <mapdelta/subgraph.hpp>

#include "support.hpp"

using namespace mapdelta;

namespace {

SetFamily family(std::initializer_list<std::initializer_list<std::uint32_t>> sets) {
  std::vector<EdgeSet> members;
  for (auto s : sets) members.push_back(make_edge_set(s));
  return SetFamily(0, members);
}

// Member lists only; ground sets differ between literals and computed families.
std::vector<EdgeSet> sets(const SetFamily& f) { return {f.members().begin(), f.members().end()}; }

SetFamily data_family(const char* file) {
  std::ifstream in(std::string(MAPDELTA_DATA_DIR) + "/families/" + file);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str()).family;
}

LabeledGraph triangle() {
  return {"triangle", {"a", "b", "c"}, {{EdgeId{1}, 0, 1}, {EdgeId{2}, 1, 2}, {EdgeId{3}, 2, 0}}};
}

}  // namespace

TEST_CASE("set helpers") {
  CHECK(format_set(make_edge_set({3, 1, 4})) == "{1,3,4}");
  CHECK(format_set(0) == "{}");
  CHECK(full_ground(3) == 0b111);
  CHECK(canonical_less(make_edge_set({5}), make_edge_set({1, 2})));
  CHECK(canonical_less(make_edge_set({1, 3}), make_edge_set({2, 3})));
  auto f = family({{2, 3}, {1}, {}, {1}});
  CHECK(f.size() == 3);
  CHECK(f.members()[0] == 0);
  CHECK(f.members()[1] == make_edge_set({1}));
  CHECK(f.ground() == make_edge_set({1, 2, 3}));
  CHECK(f.complemented() == family({{1, 2, 3}, {2, 3}, {1}}));
}

TEST_CASE("symmetric exchange on small families") {
  CHECK(check_symmetric_exchange(family({{}, {1, 2}})));
  CHECK(check_symmetric_exchange(family({{}, {1}, {2}, {1, 2}})));
  CHECK(check_symmetric_exchange(family({{1}, {2}, {3}})));

  auto bad = check_symmetric_exchange(family({{1, 2}, {3, 4}}));
  REQUIRE_FALSE(bad);
  REQUIRE(bad.violation);
  CHECK(bad.violation->first == make_edge_set({1, 2}));
  CHECK(bad.violation->second == make_edge_set({3, 4}));
  CHECK(bad.violation->element == EdgeId{1});
  CHECK(!bad.violation->describe().empty());
}

TEST_CASE("basis exchange") {
  CHECK(check_basis_exchange(family({{1, 2}, {1, 3}, {2, 3}})));
  auto unequal = check_basis_exchange(family({{1}, {1, 2}}));
  CHECK_FALSE(unequal);
  REQUIRE(unequal.violation);
  CHECK_FALSE(unequal.violation->element);
  CHECK_FALSE(check_basis_exchange(family({{1, 2}, {3, 4}})));
}

TEST_CASE("upper and lower matroids") {
  auto f = family({{}, {1}, {2}, {1, 2}});
  CHECK(sets(lower_matroid(f).bases) == sets(family({{}})));
  CHECK(sets(upper_matroid(f).bases) == sets(family({{1, 2}})));
  CHECK(upper_matroid(f).rank() == 2);
  CHECK_THROWS_AS(lower_matroid(family({{1, 2}, {3, 4}})), Error);
  try {
    upper_matroid(family({{1, 2}, {3, 4}}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDeltaMatroid);
  }
}

TEST_CASE("spanning trees and cotrees") {
  CHECK(sets(spanning_tree_bases(triangle())) == sets(family({{1, 2}, {1, 3}, {2, 3}})));
  CHECK(sets(cotree_bases(triangle())) == sets(family({{3}, {2}, {1}})));

  auto loop = underlying_graph(fixture("loop").map);
  CHECK(spanning_tree_bases(loop).members().size() == 1);
  CHECK(spanning_tree_bases(loop).contains(0));
  CHECK(sets(cotree_bases(loop)) == sets(family({{1}})));
  auto bridge = underlying_graph(fixture("bridge").map);
  CHECK(sets(spanning_tree_bases(bridge)) == sets(family({{1}})));

  LabeledGraph split{"split", {"a", "b"}, {{EdgeId{1}, 0, 0}}};
  try {
    spanning_tree_bases(split);
    FAIL("expected DisconnectedGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DisconnectedGraph);
  }
}

TEST_CASE("tree counts agree with the matrix-tree theorem") {
  auto k5 = fixture("k5torus").map;
  auto g = underlying_graph(k5);
  auto edges = testing::to_edges(g);
  CHECK(oracle::matrix_tree_count(5, edges) == 125);
  CHECK(spanning_tree_bases(g).size() == 125);
  auto cotrees = cotree_bases(dual_graph(k5));
  CHECK(cotrees.size() == 125);
  CHECK(cotrees.min_cardinality() == 6);
  CHECK(cotrees.max_cardinality() == 6);

  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CAPTURE(seed);
    auto m = random_map(seed, 7).map;
    for (const auto& graph : {underlying_graph(m), dual_graph(m)}) {
      auto e = testing::to_edges(graph);
      auto trees = spanning_tree_bases(graph);
      auto n = static_cast<int>(graph.vertex_count());
      CHECK(static_cast<long long>(trees.size()) == oracle::matrix_tree_count(n, e));
      CHECK(testing::to_family(trees) == oracle::spanning_trees(n, e));
    }
  }
}

TEST_CASE("map matroids and rank gap") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto m = fixture(name).map;
    auto gamma = enumerate_feasible_gamma(m);
    CHECK(lower_matroid(gamma).bases == spanning_tree_bases(underlying_graph(m)));
    CHECK(upper_matroid(gamma).bases == cotree_bases(dual_graph(m)));
    auto gap = rank_gap(m, gamma);
    CHECK(gap.euler == euler_characteristic(m));
    CHECK(gap.holds());
    CHECK(rank_gap_check(m));
  }
  auto gap = rank_gap(fixture("k5torus").map, enumerate_feasible_gamma(fixture("k5torus").map));
  CHECK(gap.lower_rank == 4);
  CHECK(gap.upper_rank == 6);
  CHECK_FALSE(RankGap{3, 3, 0}.holds());
}

TEST_CASE("parity") {
  CHECK(parity_uniform(family({{}, {1, 2}})));
  CHECK_FALSE(parity_uniform(family({{}, {1}})));
  CHECK(has_both_parities(family({{}, {1}})));
  CHECK_FALSE(has_both_parities(family({{1}, {2}})));
  CHECK_THROWS_AS(parity_uniform(SetFamily{}), Error);
  CHECK(has_both_parities(enumerate_feasible_gamma(fixture("crosscap").map)));
}

TEST_CASE("bundled families") {
  auto f5 = data_family("planar12.fam");
  CHECK(f5.size() == 12);
  CHECK(check_symmetric_exchange(f5));
  CHECK(parity_uniform(f5));

  auto f6 = data_family("gap_two.fam");
  REQUIRE(check_symmetric_exchange(f6));
  CHECK(lower_matroid(f6).rank() == 3);
  CHECK(upper_matroid(f6).rank() == 5);

  auto f7 = data_family("mixed_parity.fam");
  CHECK_FALSE(parity_uniform(f7));
  CHECK(oracle::symmetric_exchange(testing::to_family(f7)) == bool(check_symmetric_exchange(f7)));

  CHECK_FALSE(check_symmetric_exchange(data_family("not_delta.fam")));
}

TEST_CASE("exchange checkers agree with the oracle on random families") {
  std::mt19937_64 rng(20261019);
  int delta_count = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    oracle::Family f;
    const int members = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < members; ++i) f.insert(oracle::mask_to_set(static_cast<std::uint32_t>(rng() % (1u << n))));
    auto lib = testing::from_family(f);
    bool expected = oracle::symmetric_exchange(f);
    delta_count += expected;
    CHECK(bool(check_symmetric_exchange(lib)) == expected);
    CHECK(bool(check_basis_exchange(lib)) == oracle::basis_exchange(f));
  }
  CHECK(delta_count > 20);

  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto m = random_map(seed, 6).map;
    auto f = enumerate_feasible_k(m);
    CHECK(oracle::symmetric_exchange(testing::to_family(f)));
    CHECK(oracle::basis_exchange(testing::to_family(upper_matroid(f).bases)));
  }
}
