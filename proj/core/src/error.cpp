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

#include "mapdelta/error.hpp"

namespace mapdelta {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::FixedPoint: return "FixedPoint";
    case ErrorCode::RedGreenParallel: return "RedGreenParallel";
    case ErrorCode::BadQuadrilateral: return "BadQuadrilateral";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::NotDeltaMatroid: return "NotDeltaMatroid";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::AmbiguousCorners: return "AmbiguousCorners";
    case ErrorCode::AmbiguousGluing: return "AmbiguousGluing";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace mapdelta
