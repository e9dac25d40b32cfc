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

#include "streamshare/io.hpp"

#include <charconv>
#include <sstream>

namespace streamshare {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> splitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

Json stringArray(const std::vector<Rational>& values, bool decimal) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(decimal ? toDecimalString(v) : toFractionString(v));
  return out;
}

Json problemJson(const Problem& p) {
  Json streams = Json::array();
  for (std::size_t i = 0; i < p.artistCount(); ++i) {
    Json row = Json::array();
    for (auto t : p.row(i)) row.push_back(t);
    streams.push_back(std::move(row));
  }
  return Json{{"artists", p.artists()}, {"users", p.users()}, {"streams", std::move(streams)}};
}

Json idList(const Problem& p, const std::vector<std::size_t>& positions, bool users) {
  Json out = Json::array();
  for (auto k : positions) out.push_back(users ? p.users()[k] : p.artists()[k]);
  return out;
}

constexpr std::string_view kShapeNames[] = {"single-problem", "user-partition", "user-subset",
                                            "artist-pair",    "row-change",     "column-change"};

Json instanceJson(const AxiomInstance& instance) {
  Json out{{"shape", kShapeNames[instance.index()]}};
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, SingleProblem>) {
          out["problems"] = Json::array({problemJson(inst.problem)});
        } else if constexpr (std::is_same_v<T, UserPartition>) {
          out["problems"] = Json::array({problemJson(inst.problem)});
          out["users"] = idList(inst.problem, inst.firstPart, true);
        } else if constexpr (std::is_same_v<T, UserSubset>) {
          out["problems"] = Json::array({problemJson(inst.problem)});
          out["users"] = idList(inst.problem, inst.coalition, true);
        } else if constexpr (std::is_same_v<T, ArtistPair>) {
          out["problems"] = Json::array({problemJson(inst.problem)});
          out["artists"] = idList(inst.problem, {inst.first, inst.second}, false);
        } else if constexpr (std::is_same_v<T, RowChange>) {
          out["problems"] = Json::array({problemJson(inst.before), problemJson(inst.after)});
          out["artists"] = idList(inst.before, {inst.artist}, false);
        } else {
          out["problems"] = Json::array({problemJson(inst.before), problemJson(inst.after)});
          out["users"] = idList(inst.before, {inst.user}, true);
        }
      },
      instance);
  return out;
}

Json header(std::string_view kind) {
  return Json{{"schema", "streamshare/report"}, {"schema_version", kReportSchemaVersion}, {"kind", kind}};
}

std::string matrixText(const Json& problem, const std::string& indent) {
  std::ostringstream out;
  out << indent << "artist";
  for (const auto& u : problem["users"]) out << ',' << u.get<std::string>();
  out << '\n';
  for (std::size_t i = 0; i < problem["artists"].size(); ++i) {
    out << indent << problem["artists"][i].get<std::string>();
    for (const auto& t : problem["streams"][i]) out << ',' << t.get<std::int64_t>();
    out << '\n';
  }
  return out.str();
}

std::string joined(const Json& array) {
  std::string out;
  for (const auto& v : array) {
    if (!out.empty()) out += ", ";
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

void verdictText(std::ostringstream& out, const Json& v) {
  out << v["axiom"].get<std::string>() << " / " << v["index"].get<std::string>() << ": "
      << v["outcome"].get<std::string>();
  if (v.contains("expected")) {
    out << " (expected " << v["expected"].get<std::string>() << ", "
        << (v["matches"].get<bool>() ? "match" : "MISMATCH") << ")";
  }
  out << "\n  trials " << v["trials"] << " (grid " << v["grid_trials"] << "), checks " << v["checks"]
      << ", skipped " << v["skipped"] << ", seed " << v["seed"] << '\n';
  if (v.contains("witness")) {
    const auto& w = v["witness"];
    out << "  witness at trial " << w["trial"] << " [" << w["shape"].get<std::string>() << "]: "
        << w["detail"].get<std::string>() << '\n';
    if (w.contains("artists")) out << "  artists: " << joined(w["artists"]) << '\n';
    if (w.contains("users")) out << "  users: " << joined(w["users"]) << '\n';
    if (w.contains("weights")) {
      out << "  weights:";
      for (const auto& [id, value] : w["weights"].items()) out << ' ' << id << '=' << value.get<std::string>();
      out << '\n';
    }
    for (const auto& p : w["problems"]) out << matrixText(p, "    ");
  }
}

std::string renderText(const Json& doc) {
  std::ostringstream out;
  const auto kind = doc["kind"].get<std::string>();
  out << "streamshare report v" << doc["schema_version"] << " (" << kind << ")\n";
  if (kind == "allocation") {
    const auto& p = doc["problem"];
    out << "artists " << p["n"] << ", users " << p["m"] << ", price " << doc["price"].get<std::string>()
        << "\n";
    for (const auto& s : doc["sections"]) {
      out << "\n[" << s["index"].get<std::string>() << "]\n";
      for (std::size_t i = 0; i < p["artists"].size(); ++i) {
        out << "  " << p["artists"][i].get<std::string>() << "  index " << s["values"][i].get<std::string>()
            << "  reward " << s["rewards"][i].get<std::string>() << " (" << s["rewards_decimal"][i].get<std::string>()
            << ")  payout " << s["payouts_decimal"][i].get<std::string>() << '\n';
      }
      out << "  total " << s["total"].get<std::string>() << '\n';
    }
  } else if (kind == "audit") {
    for (const auto& v : doc["verdicts"]) {
      out << '\n';
      verdictText(out, v);
    }
  } else if (kind == "table") {
    out << "trials " << doc["trials"] << ", seed " << doc["seed"] << ", all match: "
        << (doc["all_match"].get<bool>() ? "yes" : "NO") << '\n';
    for (const auto& v : doc["cells"]) {
      out << '\n';
      verdictText(out, v);
    }
  } else if (kind == "independence") {
    out << "trials " << doc["trials"] << ", seed " << doc["seed"] << ", all claims hold: "
        << (doc["all_match"].get<bool>() ? "yes" : "NO") << '\n';
    for (const auto& c : doc["claims"]) {
      out << '\n' << c["system"].get<std::string>() << ": " << c["index"].get<std::string>() << " should "
          << (c["expected_holds"].get<bool>() ? "satisfy " : "violate ") << c["axiom"].get<std::string>()
          << " -> " << (c["matches"].get<bool>() ? "ok" : "CLAIM FAILS") << '\n';
      verdictText(out, c["verdict"]);
    }
  }
  return out.str();
}

}  // namespace

Problem parseMatrix(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, 1, "empty input");

  const auto head = splitFields(lines.front());
  if (head.front() != "artist") throw ParseError(1, 1, "header must start with 'artist'");
  std::vector<std::string> users;
  for (std::size_t c = 1; c < head.size(); ++c) {
    if (head[c].empty()) throw ParseError(1, c + 1, "empty user id");
    users.emplace_back(head[c]);
  }
  if (users.empty()) throw ParseError(1, 2, "no users in header");

  std::vector<std::string> artists;
  StreamMatrix streams;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto fields = splitFields(lines[l]);
    const auto lineNo = l + 1;
    if (fields.size() != users.size() + 1) {
      throw ParseError(lineNo, std::min(fields.size(), users.size() + 1) + 1,
                       "expected " + std::to_string(users.size() + 1) + " fields, found " +
                           std::to_string(fields.size()));
    }
    if (fields.front().empty()) throw ParseError(lineNo, 1, "empty artist id");
    artists.emplace_back(fields.front());
    std::vector<std::int64_t> row;
    for (std::size_t c = 1; c < fields.size(); ++c) {
      std::int64_t value = 0;
      const auto* first = fields[c].data();
      const auto* last = first + fields[c].size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || fields[c].empty() || value < 0) {
        throw ParseError(lineNo, c + 1, "'" + std::string(fields[c]) + "' is not a nonnegative integer");
      }
      row.push_back(value);
    }
    streams.push_back(std::move(row));
  }
  if (artists.empty()) throw ParseError(lines.size() + 1, 1, "no artist rows");
  return buildProblem(std::move(artists), std::move(users), streams);
}

std::string writeMatrix(const Problem& p) {
  std::string out = "artist";
  for (const auto& u : p.users()) out += "," + u;
  out += '\n';
  for (std::size_t i = 0; i < p.artistCount(); ++i) {
    out += p.artists()[i];
    for (auto t : p.row(i)) out += "," + std::to_string(t);
    out += '\n';
  }
  return out;
}

std::string exportGame(const CoalitionGame& g) {
  const unsigned n = g.playerCount();
  std::string out;
  const auto& table = g.table();
  for (std::size_t s = 0; s < table.size(); ++s) {
    for (unsigned bit = n; bit-- > 0;) out += (s >> bit & 1U) ? '1' : '0';
    out += ',';
    out += toFractionString(table[s]);
    out += '\n';
  }
  return out;
}

Json problemSummary(const Problem& p) {
  return Json{{"n", p.artistCount()}, {"m", p.userCount()}, {"artists", p.artists()}, {"users", p.users()}};
}

Json allocationReport(const Problem& p, const AllocateOptions& options) {
  Json doc = header("allocation");
  doc["problem"] = problemSummary(p);
  doc["price"] = toFractionString(options.price);
  Json sections = Json::array();
  for (const auto& kind : options.indices) {
    const auto report = rewards(computeIndex(kind, p), p);
    std::vector<Rational> payouts;
    for (const auto& r : report.rewards) payouts.push_back(r * options.price);
    Json s{{"index", kind.name()}};
    s["values"] = stringArray(report.index.values, false);
    s["values_decimal"] = stringArray(report.index.values, true);
    s["rewards"] = stringArray(report.rewards, false);
    s["rewards_decimal"] = stringArray(report.rewards, true);
    s["payouts"] = stringArray(payouts, false);
    s["payouts_decimal"] = stringArray(payouts, true);
    s["total"] = toFractionString(report.total);
    sections.push_back(std::move(s));
  }
  doc["sections"] = std::move(sections);
  return doc;
}

Json verdictJson(const AxiomVerdict& verdict, std::optional<bool> expected) {
  Json v{{"axiom", axiomName(verdict.axiom)}, {"index", verdict.index.name()}};
  if (verdict.index.isWeighted()) {
    if (verdict.index.weights) {
      Json w = Json::object();
      for (const auto& [id, value] : *verdict.index.weights) w[id] = toFractionString(value);
      v["weights"] = std::move(w);
    } else {
      v["weight_seed"] = verdict.index.weightSeed;
    }
  }
  v["outcome"] = verdict.holds() ? "holds-on-all-trials" : "counterexample";
  if (expected) {
    v["expected"] = *expected ? "Yes" : "No";
    v["matches"] = verdict.holds() == *expected;
  }
  v["trials"] = verdict.trials;
  v["grid_trials"] = verdict.gridTrials;
  v["checks"] = verdict.checks;
  v["skipped"] = verdict.skipped;
  v["seed"] = verdict.seed;
  if (verdict.witness) {
    Json w{{"trial", verdict.witness->trial}, {"detail", verdict.witness->detail}};
    w.update(instanceJson(verdict.witness->instance));
    if (verdict.index.isWeighted()) {
      // Resolved weights of the witness's identifiers, so it can be checked by hand.
      const auto& first = w["problems"][0];
      const auto& ids = verdict.index.tag == IndexTag::I3 ? first["users"] : first["artists"];
      Json weights = Json::object();
      for (const auto& id : ids) {
        weights[id.get<std::string>()] = toFractionString(verdict.index.weightOf(id.get<std::string>()));
      }
      w["weights"] = std::move(weights);
    }
    v["witness"] = std::move(w);
  }
  return v;
}

Json auditReport(const std::vector<AxiomVerdict>& verdicts) {
  Json doc = header("audit");
  Json list = Json::array();
  for (const auto& v : verdicts) list.push_back(verdictJson(v, tableExpectation(v.axiom, v.index.tag)));
  doc["verdicts"] = std::move(list);
  return doc;
}

Json tableReport(const TableReport& table) {
  Json doc = header("table");
  doc["trials"] = table.trials;
  doc["seed"] = table.seed;
  doc["all_match"] = table.allMatch();
  Json cells = Json::array();
  for (const auto& c : table.cells) cells.push_back(verdictJson(c.verdict, c.expectedHolds));
  doc["cells"] = std::move(cells);
  return doc;
}

Json independenceReport(const IndependenceReport& report) {
  Json doc = header("independence");
  doc["trials"] = report.trials;
  doc["seed"] = report.seed;
  doc["all_match"] = report.allMatch();
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    claims.push_back(Json{{"system", c.system},
                          {"index", indexName(c.index)},
                          {"axiom", axiomName(c.axiom)},
                          {"expected_holds", c.expectedHolds},
                          {"matches", c.matches()},
                          {"verdict", verdictJson(c.verdict)}});
  }
  doc["claims"] = std::move(claims);
  return doc;
}

std::string renderReport(const Json& doc, ReportFormat format) {
  if (format == ReportFormat::Json) return doc.dump(2) + "\n";
  return renderText(doc);
}

}  // namespace streamshare
