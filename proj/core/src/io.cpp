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

#include "mapdelta/io.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "mapdelta/error.hpp"

namespace mapdelta {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::optional<std::uint64_t> to_number(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::uint64_t number_or_throw(std::string_view s, std::size_t line, const char* what) {
  auto value = to_number(s);
  if (!value) syntax(line, std::string("expected ") + what + ", got '" + std::string(s) + "'");
  return *value;
}

std::string join_rest(const std::vector<std::string>& tokens, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    if (i > from) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::vector<FlagPair> parse_pairs(const Line& line) {
  std::vector<FlagPair> pairs;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const std::string& tok = line.tokens[i];
    auto dash = tok.find('-');
    if (dash == std::string::npos) syntax(line.number, "expected a flag pair a-b, got '" + tok + "'");
    auto a = number_or_throw(std::string_view(tok).substr(0, dash), line.number, "a flag number");
    auto b = number_or_throw(std::string_view(tok).substr(dash + 1), line.number, "a flag number");
    if (a > std::numeric_limits<Flag>::max() || b > std::numeric_limits<Flag>::max()) {
      syntax(line.number, "flag number too large");
    }
    pairs.emplace_back(static_cast<Flag>(a), static_cast<Flag>(b));
  }
  return pairs;
}

}  // namespace

TextKind detect_kind(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) return TextKind::Family;
  const auto& head = lines.front().tokens.front();
  if (head == "map") return TextKind::Map;
  if (head == "graph") return TextKind::Graph;
  return TextKind::Family;
}

NamedMap parse_map(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) syntax(1, "empty input");
  if (lines[0].tokens[0] != "map" || lines[0].tokens.size() < 2) syntax(lines[0].number, "expected 'map <name>'");
  if (lines.size() < 2 || lines[1].tokens[0] != "flags" || lines[1].tokens.size() != 2) {
    syntax(lines.size() < 2 ? lines[0].number + 1 : lines[1].number, "expected 'flags <n>'");
  }

  MapPairings pairs;
  pairs.flag_count = number_or_throw(lines[1].tokens[1], lines[1].number, "a flag count");

  std::set<std::string> seen;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& head = line.tokens[0];
    std::vector<FlagPair>* target = nullptr;
    if (head == "R:") target = &pairs.red;
    if (head == "G:") target = &pairs.green;
    if (head == "B:") target = &pairs.black;
    if (target == nullptr) syntax(line.number, "expected 'R:', 'G:' or 'B:', got '" + head + "'");
    if (!seen.insert(head).second) syntax(line.number, "colour " + head + " given twice");
    *target = parse_pairs(line);
  }
  for (const char* color : {"R:", "G:", "B:"}) {
    if (!seen.contains(color)) syntax(lines.back().number, std::string("missing colour line ") + color);
  }
  return NamedMap{join_rest(lines[0].tokens, 1), validate_map(pairs)};
}

std::string emit_map(const NamedMap& named) {
  auto pairs = named.map.pairings();
  std::string out = "map " + named.name + "\nflags " + std::to_string(pairs.flag_count) + "\n";
  auto emit = [&out](const char* label, const std::vector<FlagPair>& list) {
    out += label;
    for (auto [a, b] : list) out += " " + std::to_string(a) + "-" + std::to_string(b);
    out += '\n';
  };
  emit("R:", pairs.red);
  emit("G:", pairs.green);
  emit("B:", pairs.black);
  return out;
}

LabeledGraph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) syntax(1, "empty input");
  if (lines[0].tokens[0] != "graph" || lines[0].tokens.size() < 2) {
    syntax(lines[0].number, "expected 'graph <name>'");
  }
  if (lines.size() < 2 || lines[1].tokens[0] != "vertices") {
    syntax(lines.size() < 2 ? lines[0].number + 1 : lines[1].number, "expected 'vertices v1 v2 ...'");
  }

  LabeledGraph g;
  g.name = join_rest(lines[0].tokens, 1);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 1; i < lines[1].tokens.size(); ++i) {
    const auto& name = lines[1].tokens[i];
    if (!index.emplace(name, g.vertices.size()).second) syntax(lines[1].number, "vertex '" + name + "' repeated");
    g.vertices.push_back(name);
  }
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "edge" || line.tokens.size() != 4) syntax(line.number, "expected 'edge <id> <u> <v>'");
    auto id = number_or_throw(line.tokens[1], line.number, "an edge id");
    if (id == 0 || id > std::numeric_limits<std::uint32_t>::max()) syntax(line.number, "edge ids start at 1");
    auto u = index.find(line.tokens[2]);
    auto v = index.find(line.tokens[3]);
    if (u == index.end() || v == index.end()) {
      syntax(line.number, "edge endpoint is not a declared vertex");
    }
    if (g.find_edge(EdgeId{static_cast<std::uint32_t>(id)}) != nullptr) {
      syntax(line.number, "edge " + std::to_string(id) + " repeated");
    }
    g.edges.push_back({EdgeId{static_cast<std::uint32_t>(id)}, u->second, v->second});
  }
  return g;
}

std::string emit_graph(const LabeledGraph& g) {
  std::string out = "graph " + g.name + "\nvertices";
  for (const auto& v : g.vertices) out += " " + v;
  out += '\n';
  for (const auto& e : g.edges) {
    out += "edge " + std::to_string(e.id.value) + " " + g.vertices[e.u] + " " + g.vertices[e.v] + "\n";
  }
  return out;
}

ParsedFamily parse_family(std::string_view text) {
  ParsedFamily out;
  std::vector<EdgeSet> members;
  std::set<EdgeSet> seen;
  auto lines = tokenize(text);
  std::size_t first = 0;
  if (!lines.empty() && lines[0].tokens[0] == "family") {
    out.name = join_rest(lines[0].tokens, 1);
    first = 1;
  }
  for (std::size_t i = first; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::string body = join_rest(line.tokens, 0);
    std::size_t pos = 0;
    while (pos < body.size()) {
      char c = body[pos];
      if (c == ' ' || c == ',' || c == '\t') {
        ++pos;
        continue;
      }
      if (c != '{') syntax(line.number, std::string("expected '{', got '") + c + "'");
      std::size_t close = body.find('}', pos);
      if (close == std::string::npos) syntax(line.number, "unterminated set");
      std::string inner = body.substr(pos + 1, close - pos - 1);
      EdgeSet set = 0;
      std::size_t start = 0;
      while (start <= inner.size()) {
        std::size_t comma = inner.find(',', start);
        if (comma == std::string::npos) comma = inner.size();
        std::string item = inner.substr(start, comma - start);
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) {
          auto id = number_or_throw(item, line.number, "an edge id");
          if (id == 0 || id > kMaxGroundSize) syntax(line.number, "edge id " + item + " outside 1..64");
          set |= edge_bit(EdgeId{static_cast<std::uint32_t>(id)});
        } else if (comma != inner.size() || start != 0) {
          syntax(line.number, "empty element in set");
        }
        start = comma + 1;
      }
      if (!seen.insert(set).second) {
        out.warnings.push_back("line " + std::to_string(line.number) + ": duplicate set " + format_set(set));
      }
      members.push_back(set);
      pos = close + 1;
    }
  }
  out.family = SetFamily(0, std::move(members));
  return out;
}

std::string emit_family(const SetFamily& family, std::string_view name) {
  std::string out;
  if (!name.empty()) out += "family " + std::string(name) + "\n";
  for (EdgeSet s : family.members()) out += format_set(s) + "\n";
  return out;
}

}  // namespace mapdelta
