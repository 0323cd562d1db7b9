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

#include "mapdelta/set_family.hpp"

#include <algorithm>

#include "mapdelta/error.hpp"

namespace mapdelta {

EdgeSet make_edge_set(std::initializer_list<std::uint32_t> ids) {
  EdgeSet s = 0;
  for (auto id : ids) {
    if (id == 0 || id > kMaxGroundSize) {
      throw Error(ErrorCode::GroundSetTooLarge, "edge id " + std::to_string(id) + " outside 1..64");
    }
    s |= edge_bit(EdgeId{id});
  }
  return s;
}

EdgeSet make_edge_set(std::span<const EdgeId> ids) {
  EdgeSet s = 0;
  for (auto id : ids) {
    if (id.value == 0 || id.value > kMaxGroundSize) {
      throw Error(ErrorCode::GroundSetTooLarge, "edge id " + std::to_string(id.value) + " outside 1..64");
    }
    s |= edge_bit(id);
  }
  return s;
}

std::vector<EdgeId> elements(EdgeSet s) {
  std::vector<EdgeId> out;
  while (s != 0) {
    out.push_back(EdgeId{static_cast<std::uint32_t>(std::countr_zero(s)) + 1});
    s &= s - 1;
  }
  return out;
}

EdgeSet full_ground(std::size_t m) {
  if (m > kMaxGroundSize) throw Error(ErrorCode::GroundSetTooLarge, std::to_string(m) + " elements exceed 64");
  return m == kMaxGroundSize ? ~EdgeSet{0} : (EdgeSet{1} << m) - 1;
}

bool canonical_less(EdgeSet a, EdgeSet b) noexcept {
  int ca = cardinality(a), cb = cardinality(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  // The smallest element in exactly one of the two sets decides.
  EdgeSet lowest = (a ^ b) & -(a ^ b);
  return (a & lowest) != 0;
}

std::string format_set(EdgeSet s) {
  std::string out = "{";
  bool first = true;
  for (EdgeId id : elements(s)) {
    if (!first) out += ',';
    out += std::to_string(id.value);
    first = false;
  }
  out += '}';
  return out;
}

SetFamily::SetFamily(EdgeSet ground, std::vector<EdgeSet> members) : ground_(ground), members_(std::move(members)) {
  for (EdgeSet s : members_) ground_ |= s;
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  lookup_ = members_;
  std::sort(lookup_.begin(), lookup_.end());
}

bool SetFamily::contains(EdgeSet s) const { return std::binary_search(lookup_.begin(), lookup_.end(), s); }

bool SetFamily::is_subfamily_of(const SetFamily& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](EdgeSet s) { return other.contains(s); });
}

SetFamily SetFamily::complemented() const {
  std::vector<EdgeSet> out;
  out.reserve(members_.size());
  for (EdgeSet s : members_) out.push_back(ground_ & ~s);
  return SetFamily(ground_, std::move(out));
}

int SetFamily::min_cardinality() const { return members_.empty() ? 0 : cardinality(members_.front()); }

int SetFamily::max_cardinality() const { return members_.empty() ? 0 : cardinality(members_.back()); }

SetFamily SetFamily::smallest_members() const {
  std::vector<EdgeSet> out;
  for (EdgeSet s : members_) {
    if (cardinality(s) == min_cardinality()) out.push_back(s);
  }
  return SetFamily(ground_, std::move(out));
}

SetFamily SetFamily::largest_members() const {
  std::vector<EdgeSet> out;
  for (EdgeSet s : members_) {
    if (cardinality(s) == max_cardinality()) out.push_back(s);
  }
  return SetFamily(ground_, std::move(out));
}

}  // namespace mapdelta
