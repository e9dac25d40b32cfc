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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace streamshare {

enum class ErrorCode {
  // problem model
  EmptyArtists,
  EmptyUsers,
  DimensionMismatch,
  NegativeStream,
  SilentUser,
  DuplicateId,
  UnknownArtist,
  UnknownUser,
  LastArtist,
  LastUser,
  BadPartition,
  // indices
  MissingWeights,
  NonpositiveWeight,
  ZeroTotalIndex,
  // games
  TooManyArtists,
  // axioms
  ShapeMismatch,
  InvalidReducedProblem,
  TableMismatch,
  ClaimMismatch,
  // io
  ParseError,
  Usage,
};

std::string_view errorName(ErrorCode code);

/// All library failures are reported as this exception; code() identifies the
/// failure class so callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(errorName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace streamshare
