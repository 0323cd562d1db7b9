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

#include "mapdelta/report.hpp"

#include <algorithm>
#include <sstream>

#include "mapdelta/delta_matroid.hpp"

namespace mapdelta {
namespace {

std::string family_text(const SetFamily& family, std::size_t limit = 16) {
  std::string out = "{";
  std::size_t shown = 0;
  for (EdgeSet s : family.members()) {
    if (shown == limit) {
      out += ", ... (" + std::to_string(family.size()) + " sets)";
      break;
    }
    if (shown > 0) out += ", ";
    out += format_set(s);
    ++shown;
  }
  return out + "}";
}

std::string first_difference(const SetFamily& got, const SetFamily& want) {
  for (EdgeSet s : got.members()) {
    if (!want.contains(s)) return format_set(s) + " is extra";
  }
  for (EdgeSet s : want.members()) {
    if (!got.contains(s)) return format_set(s) + " is missing";
  }
  return "ground sets differ";
}

PropertyCheck exchange_check(const char* name, const SetFamily& family) {
  if (family.empty()) return {name, false, "family is empty"};
  auto result = check_symmetric_exchange(family);
  return {name, result.holds, result.violation ? result.violation->describe() : ""};
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

Report build_report(const NamedMap& named, const EnumerateOptions& options) {
  const CombinatorialMap& map = named.map;
  Report r;
  r.name = named.name;
  r.edges = map.edge_count();
  const LabeledGraph primal = underlying_graph(map);
  const LabeledGraph dual = dual_graph(map);
  r.vertices = primal.vertex_count();
  r.faces = dual.vertex_count();
  r.euler = euler_characteristic(map);
  r.orientable = is_orientable(map);
  r.gamma = enumerate_feasible_gamma(map, options);
  r.k = enumerate_feasible_k(map, options);
  r.hamiltonian = find_hamiltonian(map);

  // Extremal members are taken directly so a failed exchange check still
  // yields a complete report.
  const SetFamily lower = r.gamma.smallest_members();
  const SetFamily upper = r.gamma.largest_members();
  r.lower_rank = r.gamma.min_cardinality();
  r.upper_rank = r.gamma.max_cardinality();

  const EdgeSet found = r.hamiltonian.selection.green_set();
  r.checks.push_back({kCheckGammaNonempty, !r.gamma.empty() && r.gamma.contains(found),
                      r.gamma.empty() ? "no Hamiltonian selection" : "swap search found " + format_set(found)});
  r.checks.push_back(exchange_check(kCheckGammaExchange, r.gamma));

  const SetFamily trees = spanning_tree_bases(primal);
  r.checks.push_back({kCheckLowerCycle, lower == trees, lower == trees ? "" : first_difference(lower, trees)});
  const SetFamily cotrees = cotree_bases(dual);
  r.checks.push_back({kCheckUpperCocycle, upper == cotrees, upper == cotrees ? "" : first_difference(upper, cotrees)});

  if (r.gamma.empty()) {
    r.checks.push_back({kCheckBasisExchange, false, "family is empty"});
  } else {
    auto lo = check_basis_exchange(lower);
    auto up = check_basis_exchange(upper);
    std::string detail = !lo ? "lower: " + lo.violation->describe() : !up ? "upper: " + up.violation->describe() : "";
    r.checks.push_back({kCheckBasisExchange, lo.holds && up.holds, detail});
  }

  const bool gap = r.upper_rank - r.lower_rank == 2 - r.euler;
  r.checks.push_back({kCheckRankGap, gap,
                      "upper " + std::to_string(r.upper_rank) + " - lower " + std::to_string(r.lower_rank) +
                          " vs 2 - " + std::to_string(r.euler)});

  const bool uniform = !r.gamma.empty() && parity_uniform(r.gamma);
  r.checks.push_back({kCheckParity, !r.gamma.empty() && uniform == r.orientable,
                      std::string(r.orientable ? "bipartite" : "not bipartite") + ", parities " +
                          (uniform ? "uniform" : "mixed")});

  r.checks.push_back(exchange_check(kCheckKExchange, r.k));
  const bool subset = r.gamma.is_subfamily_of(r.k);
  std::string missing;
  for (EdgeSet s : r.gamma.members()) {
    if (!r.k.contains(s)) {
      missing = format_set(s) + " is Hamiltonian but not in the connected family";
      break;
    }
  }
  r.checks.push_back({kCheckGammaInK, subset, missing});

  const bool same = r.k.smallest_members() == lower && r.k.largest_members() == upper;
  r.checks.push_back({kCheckKMatroids, same,
                      same ? "" : "lower " + family_text(r.k.smallest_members()) + ", upper " +
                                      family_text(r.k.largest_members())});
  return r;
}

std::string format_report(const Report& r) {
  std::ostringstream out;
  out << "map " << r.name << "\n";
  out << "  edges " << r.edges << ", vertices " << r.vertices << ", faces " << r.faces << ", euler " << r.euler
      << ", " << (r.orientable ? "orientable" : "non-orientable") << "\n";
  out << "  F_gamma (" << r.gamma.size() << "): " << family_text(r.gamma) << "\n";
  out << "  F_K (" << r.k.size() << "): " << family_text(r.k) << "\n";
  out << "  lower rank " << r.lower_rank << ", upper rank " << r.upper_rank << "\n";
  out << "  swap search: " << r.hamiltonian.initial_components << " initial components, " << r.hamiltonian.swaps
      << " swaps, green set " << format_set(r.hamiltonian.selection.green_set()) << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (r.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

}  // namespace mapdelta
