// Copyright 2026 The streamshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "streamshare/error.hpp"

namespace streamshare {

std::string_view errorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyArtists: return "EmptyArtists";
    case ErrorCode::EmptyUsers: return "EmptyUsers";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeStream: return "NegativeStream";
    case ErrorCode::SilentUser: return "SilentUser";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownArtist: return "UnknownArtist";
    case ErrorCode::UnknownUser: return "UnknownUser";
    case ErrorCode::LastArtist: return "LastArtist";
    case ErrorCode::LastUser: return "LastUser";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::MissingWeights: return "MissingWeights";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::ZeroTotalIndex: return "ZeroTotalIndex";
    case ErrorCode::TooManyArtists: return "TooManyArtists";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidReducedProblem: return "InvalidReducedProblem";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::ClaimMismatch: return "ClaimMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace streamshare
