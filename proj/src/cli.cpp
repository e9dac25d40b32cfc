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

#include "streamshare/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "streamshare/io.hpp"

namespace streamshare {

namespace {

struct Options {
  std::string input;
  std::string indexList = "shapley,proRata,userCentric";
  std::string price = "1";
  std::string stance = "pessimistic";
  std::string axiom = "all";
  std::string index = "all";
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  bool table = false;
  bool independence = false;
  bool serial = false;
  std::string output;
  std::string format;
};

[[noreturn]] void usage(const std::string& message) { throw Error(ErrorCode::Usage, message); }

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ReportFormat parseFormat(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  usage("unknown format '" + name + "' (json|text)");
}

std::vector<IndexTag> parseIndexSelection(const std::string& list) {
  if (list == "all") {
    return {IndexTag::Shapley, IndexTag::ProRata, IndexTag::UserCentric, IndexTag::I1,
            IndexTag::I2,      IndexTag::I3,      IndexTag::I4};
  }
  std::vector<IndexTag> tags;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto tag = parseIndexTag(item);
    if (!tag) usage("unknown index '" + item + "'");
    tags.push_back(*tag);
  }
  if (tags.empty()) usage("empty index list");
  return tags;
}

Problem loadProblem(const Options& o) {
  if (o.input.empty()) usage("--input is required");
  return parseMatrix(readFile(o.input));
}

std::string allocateCommand(const Options& o) {
  const auto problem = loadProblem(o);
  AllocateOptions options;
  for (auto tag : parseIndexSelection(o.indexList)) options.indices.push_back(IndexKind::of(tag));
  options.price = parseRational(o.price);
  if (options.price <= 0) usage("--price must be positive");
  return renderReport(allocationReport(problem, options),
                      parseFormat(o.format.empty() ? "json" : o.format));
}

std::string gameCommand(const Options& o) {
  const auto problem = loadProblem(o);
  const auto exec = o.serial ? Execution::Serial : Execution::Parallel;
  std::optional<CoalitionGame> game;
  if (o.stance == "dual") {
    game = dualGame(pessimisticGame(problem, {}, exec), exec);
  } else if (auto stance = parseStance(o.stance)) {
    game = *stance == Stance::Pessimistic ? pessimisticGame(problem, {}, exec)
                                          : optimisticGame(problem, {}, exec);
  } else {
    usage("unknown stance '" + o.stance + "' (pessimistic|optimistic|dual)");
  }
  // The bare "bitmask,worth" listing is the text format.
  if (o.format.empty() || o.format == "text") return exportGame(*game);
  parseFormat(o.format);
  Json doc{{"schema", "streamshare/report"},
           {"schema_version", kReportSchemaVersion},
           {"kind", "game"},
           {"problem", problemSummary(problem)},
           {"stance", game->label()}};
  Json worth = Json::array();
  for (const auto& w : game->table()) worth.push_back(toFractionString(w));
  doc["worth"] = std::move(worth);
  return renderReport(doc, ReportFormat::Json);
}

struct AuditResult {
  std::string report;
  bool mismatch = false;
};

AuditResult auditCommand(const Options& o) {
  if (o.trials == 0) usage("--trials must be positive");
  if (o.table && o.independence) usage("--table and --independence are exclusive");
  const auto exec = o.serial ? Execution::Serial : Execution::Parallel;
  const auto format = parseFormat(o.format.empty() ? "json" : o.format);

  if (o.table) {
    if (o.axiom != "all" || o.index != "all") usage("--table audits all axioms and indices");
    const auto report = reproduceTable1(o.trials, o.seed, {}, exec);
    return {renderReport(tableReport(report), format), !report.allMatch()};
  }
  if (o.independence) {
    if (o.axiom != "all" || o.index != "all") usage("--independence takes no axiom or index");
    const auto report = independenceSuite(o.trials, o.seed, {}, exec);
    return {renderReport(independenceReport(report), format), !report.allMatch()};
  }

  std::vector<AxiomId> axioms;
  if (o.axiom == "all") {
    axioms.assign(kAllAxioms.begin(), kAllAxioms.end());
  } else if (auto a = parseAxiom(o.axiom)) {
    axioms.push_back(*a);
  } else {
    usage("unknown axiom '" + o.axiom + "'");
  }
  const auto tags = o.index == "all" ? std::vector<IndexTag>(kTableIndices.begin(), kTableIndices.end())
                                     : parseIndexSelection(o.index);

  std::vector<AxiomVerdict> verdicts;
  bool mismatch = false;
  for (auto axiom : axioms) {
    for (auto tag : tags) {
      verdicts.push_back(auditAxiom(axiom, IndexKind::of(tag), o.trials, o.seed, {}, exec));
      if (auto expected = tableExpectation(axiom, tag)) mismatch |= verdicts.back().holds() != *expected;
    }
  }
  return {renderReport(auditReport(verdicts), format), mismatch};
}

std::uint64_t defaultSeed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto seed = std::stoull(env, &used, 0);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return seed;
  } catch (const std::exception&) {
    usage(std::string(kSeedEnvVar) + " is not an unsigned integer: '" + env + "'");
  }
}

void addCommon(CLI::App* cmd, Options& o) {
  cmd->add_option("--output", o.output, "Write the report to PATH instead of stdout");
  cmd->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--serial", o.serial, "Run kernels on one thread");
}

int emit(const std::string& report, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << report;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  file << report;
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + o.output + "'");
  return kExitOk;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Popularity indices and revenue sharing for streaming platforms", "streamshare"};
  app.require_subcommand(1);

  auto* allocate = app.add_subcommand("allocate", "Index values, rewards and payouts for a stream matrix");
  allocate->add_option("--input", o.input, "Stream matrix CSV")->required();
  allocate->add_option("--index", o.indexList, "Comma-separated indices, or 'all'")->capture_default_str();
  allocate->add_option("--price", o.price, "Payout per user (display only)")->capture_default_str();
  addCommon(allocate, o);

  auto* game = app.add_subcommand("game", "Export the coalition game worth table");
  game->add_option("--input", o.input, "Stream matrix CSV")->required();
  game->add_option("--stance", o.stance, "pessimistic | optimistic | dual")->capture_default_str();
  addCommon(game, o);

  auto* audit = app.add_subcommand("audit", "Search for axiom violations");
  audit->add_option("axiom", o.axiom, "Axiom name or 'all'")->capture_default_str();
  audit->add_option("index", o.index, "Index list or 'all' (the three payout indices)")->capture_default_str();
  audit->add_option("--trials", o.trials, "Random problems per audit")->capture_default_str();
  audit->add_option("--seed", o.seed, "Seed (default 42, or $STREAMSHARE_SEED)");
  audit->add_flag("--table", o.table, "Reproduce the rules-versus-axioms table");
  audit->add_flag("--independence", o.independence, "Check the axiom-independence claims");
  addCommon(audit, o);

  try {
    o.seed = defaultSeed();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "streamshare: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*allocate) return emit(allocateCommand(o), o, out);
    if (*game) return emit(gameCommand(o), o, out);
    const auto result = auditCommand(o);
    emit(result.report, o, out);
    return result.mismatch ? kExitMismatch : kExitOk;
  } catch (const Error& e) {
    err << "streamshare: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::Usage: return kExitUsage;
      case ErrorCode::TableMismatch:
      case ErrorCode::ClaimMismatch: return kExitMismatch;
      default: return kExitData;
    }
  }
}

}  // namespace streamshare
