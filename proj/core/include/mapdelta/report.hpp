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

#pragma once

#include <string>
#include <vector>

#include "mapdelta/io.hpp"
#include "mapdelta/set_family.hpp"
#include "mapdelta/subgraph.hpp"

namespace mapdelta {

struct PropertyCheck {
  std::string name;
  bool passed = false;
  // Counterexample or mismatch description when the check fails.
  std::string detail;
};

/// Everything verify-all computes for one map.
struct Report {
  std::string name;
  std::size_t edges = 0;
  std::size_t vertices = 0;
  std::size_t faces = 0;
  int euler = 0;
  bool orientable = false;
  SetFamily gamma;
  SetFamily k;
  int upper_rank = 0;
  int lower_rank = 0;
  HamiltonianSearch hamiltonian;
  std::vector<PropertyCheck> checks;

  bool all_passed() const;
};

// Check names, in report order.
inline constexpr const char* kCheckGammaNonempty = "gamma-nonempty-and-contains-swap-search";
inline constexpr const char* kCheckGammaExchange = "gamma-symmetric-exchange";
inline constexpr const char* kCheckLowerCycle = "gamma-lower-is-cycle-matroid";
inline constexpr const char* kCheckUpperCocycle = "gamma-upper-is-dual-cocycle-matroid";
inline constexpr const char* kCheckBasisExchange = "gamma-matroids-basis-exchange";
inline constexpr const char* kCheckRankGap = "rank-gap-equals-2-minus-euler";
inline constexpr const char* kCheckParity = "orientable-iff-uniform-parity";
inline constexpr const char* kCheckKExchange = "k-symmetric-exchange";
inline constexpr const char* kCheckGammaInK = "gamma-subfamily-of-k";
inline constexpr const char* kCheckKMatroids = "k-matroids-equal-gamma-matroids";

/// Runs every structural check on `named`. Throws Error(GroundSetTooLarge)
/// past the enumeration limit.
Report build_report(const NamedMap& named, const EnumerateOptions& options = {});

std::string format_report(const Report& report);

}  // namespace mapdelta
