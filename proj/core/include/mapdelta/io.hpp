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

// Text formats.
//
// MAP:
//     map <name>
//     flags <n>
//     R: a-b c-d ...
//     G: ...
//     B: ...
//
// GRAPH:
//     graph <name>
//     vertices v1 v2 ...
//     edge <id> <u> <v>      (one line per edge)
//
// FAMILY: one braced set per entry, e.g. `{1,3,4}`; `{}` is the empty set.
// Entries may share a line and be separated by commas. An optional first
// line `family <name>` names the family.
//
// Tokens are whitespace separated and `#` starts a comment in every format.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mapdelta/graph.hpp"
#include "mapdelta/map.hpp"
#include "mapdelta/set_family.hpp"

namespace mapdelta {

struct NamedMap {
  std::string name;
  CombinatorialMap map;
};

// Throws Error(SyntaxError) with the line number in its message, then any
// validate_map error.
NamedMap parse_map(std::string_view text);
std::string emit_map(const NamedMap& named);

LabeledGraph parse_graph(std::string_view text);
std::string emit_graph(const LabeledGraph& g);

struct ParsedFamily {
  std::string name;
  SetFamily family;
  // One entry per repeated set.
  std::vector<std::string> warnings;
};

ParsedFamily parse_family(std::string_view text);
std::string emit_family(const SetFamily& family, std::string_view name = {});

// Sniffs the first meaningful token: "map", "graph", or anything else.
enum class TextKind { Map, Graph, Family };
TextKind detect_kind(std::string_view text);

}  // namespace mapdelta
