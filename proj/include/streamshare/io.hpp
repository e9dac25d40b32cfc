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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "streamshare/axioms.hpp"
#include "streamshare/coopgame.hpp"
#include "streamshare/error.hpp"
#include "streamshare/indices.hpp"
#include "streamshare/problem.hpp"

namespace streamshare {

inline constexpr int kReportSchemaVersion = 1;

/// Malformed matrix file; line and column are 1-based (column counts fields).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Matrix file:
//
//   artist,a,b,c
//   1,200,0,0
//   2,0,100,100
//
// Comma separated, UTF-8, header "artist" then user ids, one row per artist.
// Surrounding spaces are trimmed; a leading BOM and blank trailing lines are
// ignored. Errors: ParseError, DuplicateId, SilentUser (post-parse check).
Problem parseMatrix(std::string_view text);
std::string writeMatrix(const Problem& p);

/// One "bitmask,worth" line per coalition in ascending order. The bitmask is
/// written as n binary digits with artist 1 as the rightmost digit.
std::string exportGame(const CoalitionGame& g);

using Json = nlohmann::ordered_json;

struct AllocateOptions {
  std::vector<IndexKind> indices;
  Rational price = 1;  // display multiplier for payouts
};

Json problemSummary(const Problem& p);
Json allocationReport(const Problem& p, const AllocateOptions& options);
Json verdictJson(const AxiomVerdict& verdict, std::optional<bool> expected = std::nullopt);
Json auditReport(const std::vector<AxiomVerdict>& verdicts);
Json tableReport(const TableReport& table);
Json independenceReport(const IndependenceReport& report);

enum class ReportFormat { Json, Text };

/// Serialized report, newline terminated. Identical documents give identical bytes.
std::string renderReport(const Json& doc, ReportFormat format);

}  // namespace streamshare
