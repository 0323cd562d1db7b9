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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "mapdelta/delta_matroid.hpp"
#include "mapdelta/error.hpp"
#include "mapdelta/fixtures.hpp"
#include "mapdelta/io.hpp"
#include "mapdelta/reconstruct.hpp"
#include "mapdelta/report.hpp"
#include "mapdelta/subgraph.hpp"

namespace mapdelta::cli {
namespace {

struct Settings {
  std::uint64_t seed = 1;
  std::size_t max_edges = kMaxEnumerableEdges;
  unsigned threads = 1;

  EnumerateOptions enumerate() const { return {max_edges, threads}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A path on disk wins over a fixture of the same name.
std::string source_text(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_file(arg);
  if (auto named = find_fixture(arg)) return emit_map(*named);
  throw Error(ErrorCode::SyntaxError, "'" + arg + "' is neither a readable file nor a built-in example");
}

NamedMap load_map(const std::string& arg) { return parse_map(source_text(arg)); }

SetFamily feasible_family(const NamedMap& named, const std::string& variant, const Settings& settings) {
  return variant == "k" ? enumerate_feasible_k(named.map, settings.enumerate())
                        : enumerate_feasible_gamma(named.map, settings.enumerate());
}

// Family named by a FAMILY file, or the feasible sets of a map.
SetFamily load_family(const std::string& arg, const std::string& variant, const Settings& settings,
                      std::ostream& err) {
  std::string text = source_text(arg);
  if (detect_kind(text) == TextKind::Map) return feasible_family(parse_map(text), variant, settings);
  auto parsed = parse_family(text);
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  return parsed.family;
}

void print_bases(std::ostream& out, const char* which, const Matroid& m) {
  out << which << " rank " << m.rank() << " (" << m.bases.size() << " bases)\n" << emit_family(m.bases);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial maps and their delta-matroids", "mapdelta"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("--seed", settings.seed, "Seed for 'examples random'");
  app.add_option("--max-edges", settings.max_edges, "Edge limit for exhaustive enumeration (at most 24)")
      ->check(CLI::Range(std::size_t{1}, kMaxEnumerableEdges));
  app.add_option("--threads", settings.threads, "Enumeration workers; 0 uses every core");

  std::string map_arg, variant = "gamma", color = "green", graph_arg, dual_arg, action = "list", example_name;

  auto* validate = app.add_subcommand("validate", "Check the map axioms");
  validate->add_option("map", map_arg)->required();

  auto* feasible = app.add_subcommand("feasible", "List feasible sets");
  feasible->add_option("--variant", variant)->check(CLI::IsMember({"gamma", "k"}));
  feasible->add_option("--color", color, "Record green-selected sets or their red complements")
      ->check(CLI::IsMember({"green", "red"}));
  feasible->add_option("map", map_arg)->required();

  auto* matroids = app.add_subcommand("matroids", "Lower and upper matroids of a map or family");
  matroids->add_option("--variant", variant)->check(CLI::IsMember({"gamma", "k"}));
  matroids->add_option("source", map_arg)->required();

  auto* check_delta = app.add_subcommand("check-delta", "Check the symmetric exchange axiom");
  check_delta->add_option("--variant", variant)->check(CLI::IsMember({"gamma", "k"}));
  check_delta->add_option("source", map_arg, "FAMILY file or map")->required();

  auto* euler = app.add_subcommand("euler", "Euler characteristic");
  euler->add_option("map", map_arg)->required();

  auto* orientable = app.add_subcommand("orientable", "Whether the flag graph is bipartite");
  orientable->add_option("map", map_arg)->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild a map from a graph and its dual");
  reconstruct->add_option("--graph", graph_arg)->required();
  reconstruct->add_option("--dual", dual_arg)->required();

  bool want_dual = false;
  auto* graph = app.add_subcommand("graph", "Underlying graph (or dual) of a map in GRAPH format");
  graph->add_flag("--dual", want_dual, "Emit the geometric dual instead");
  graph->add_option("map", map_arg)->required();

  auto* verify_all = app.add_subcommand("verify-all", "Run every structural check");
  verify_all->add_option("map", map_arg)->required();

  auto* examples = app.add_subcommand("examples", "Built-in maps: list, show <name>, random");
  examples->add_option("action", action)->check(CLI::IsMember({"list", "show", "random"}));
  examples->add_option("name", example_name);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*validate) {
      auto named = load_map(map_arg);
      out << "valid map " << named.name << ": " << named.map.flag_count() << " flags, " << named.map.edge_count()
          << " edges\n";
      return kExitOk;
    }
    if (*feasible) {
      auto named = load_map(map_arg);
      auto family = feasible_family(named, variant, settings);
      if (color == "red") family = family.complemented();
      out << emit_family(family, named.name + "-" + variant + "-" + color);
      return kExitOk;
    }
    if (*matroids) {
      auto family = load_family(map_arg, variant, settings, err);
      print_bases(out, "lower", lower_matroid(family));
      print_bases(out, "upper", upper_matroid(family));
      return kExitOk;
    }
    if (*check_delta) {
      auto family = load_family(map_arg, variant, settings, err);
      auto result = check_symmetric_exchange(family);
      out << family.size() << " sets, parity " << (parity_uniform(family) ? "uniform" : "mixed") << "\n";
      if (!result) {
        out << "symmetric exchange FAILS: " << result.violation->describe() << "\n";
        return kExitPropertyViolated;
      }
      out << "symmetric exchange holds\n";
      return kExitOk;
    }
    if (*euler) {
      out << euler_characteristic(load_map(map_arg).map) << "\n";
      return kExitOk;
    }
    if (*orientable) {
      out << (is_orientable(load_map(map_arg).map) ? "true" : "false") << "\n";
      return kExitOk;
    }
    if (*reconstruct) {
      auto g = parse_graph(source_text(graph_arg));
      auto gstar = parse_graph(source_text(dual_arg));
      auto map = build_map(g, gstar, recover_rotations(g, gstar));
      out << emit_map({g.name, map});
      return kExitOk;
    }
    if (*graph) {
      auto named = load_map(map_arg);
      auto g = want_dual ? dual_graph(named.map) : underlying_graph(named.map);
      g.name = named.name + (want_dual ? "-dual" : "");
      out << emit_graph(g);
      return kExitOk;
    }
    if (*verify_all) {
      auto report = build_report(load_map(map_arg), settings.enumerate());
      out << format_report(report);
      return report.all_passed() ? kExitOk : kExitPropertyViolated;
    }
    if (*examples) {
      if (action == "list") {
        for (const auto& name : fixture_names()) out << name << "\n";
        return kExitOk;
      }
      if (action == "random") {
        out << emit_map(random_map(settings.seed, settings.max_edges));
        return kExitOk;
      }
      auto named = find_fixture(example_name);
      if (!named) {
        err << "error: no example named '" << example_name << "'\n";
        return kExitInvalidInput;
      }
      out << emit_map(*named);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::GroundSetTooLarge: return kExitTooLarge;
      case ErrorCode::NotDeltaMatroid:
      case ErrorCode::AmbiguousCorners:
      case ErrorCode::AmbiguousGluing: return kExitPropertyViolated;
      default: return kExitInvalidInput;
    }
  }
  return kExitInvalidInput;
}

}  // namespace mapdelta::cli
