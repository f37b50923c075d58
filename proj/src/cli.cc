// Copyright 2026 The Dicelab Authors
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

#include "dicelab/cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "dicelab/analysis.h"
#include "dicelab/counter.h"
#include "dicelab/enumeration.h"
#include "dicelab/payoff.h"
#include "dicelab/serialization.h"

namespace dicelab {

bool SuiteRow::Passed() const {
  auto ok = [](const std::optional<bool>& v) { return !v || *v; };
  return standard_neutrality && ok(xi_characterization) &&
         ok(counter_totality) && ok(one_step_counter_exists) && connectivity &&
         nash;
}

bool VerificationSuiteReport::Passed() const {
  return std::ranges::all_of(rows, &SuiteRow::Passed);
}

VerificationSuiteReport RunVerificationSuite(int max_sides, int workers) {
  VerificationSuiteReport report;
  for (int n = 1; n <= max_sides; ++n) {
    const std::vector<Die> space = MaterializeDice(n);
    SuiteRow row;
    row.sides = n;
    row.space_size = space.size();
    row.standard_neutrality = VerifyStandardNeutrality(n);
    row.connectivity = VerifyOneStepConnectivity(n);

    const EquilibriumReport nash =
        FindPureNash(PayoffMatrix(space, workers));
    if (n >= 4) {
      row.nash = nash.unique_standard;
      bool xi_ok = true;
      bool totality_ok = true;
      bool exists_ok = true;
      for (const Die& d : space) {
        xi_ok = xi_ok && XiAllEqual(d) == d.IsStandard();
        if (d.IsStandard()) continue;
        try {
          ConstructCounter(d);
        } catch (const DiceError&) {
          totality_ok = false;
        }
        exists_ok = exists_ok && !AllOneStepCounters(d, workers).empty();
      }
      row.xi_characterization = xi_ok;
      row.counter_totality = totality_ok;
      row.one_step_counter_exists = exists_ok;
    } else {
      const Die s = Die::Standard(n);
      row.nash = std::ranges::find(nash.equilibria, std::pair{s, s}) !=
                 nash.equilibria.end();
    }
    report.rows.push_back(row);
  }
  return report;
}

namespace {

enum class Format { kJson, kCsv, kPretty };

// Tabular view of a command result, used by the csv and pretty formats.
struct Table {
  std::vector<std::string> summary;  // pretty only
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct CommandOutput {
  std::string json;  // full text for --format json
  Table table;
  int exit_code = kExitOk;
};

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string RenderCsv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) os << ',';
      os << CsvField(cells[k]);
    }
    os << '\n';
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string RenderPretty(const Table& t) {
  std::ostringstream os;
  for (const auto& s : t.summary) os << s << '\n';
  std::vector<std::size_t> width(t.headers.size(), 0);
  for (std::size_t k = 0; k < t.headers.size(); ++k) {
    width[k] = t.headers[k].size();
    for (const auto& r : t.rows) width[k] = std::max(width[k], r[k].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) text += "  ";
      text += cells[k];
      if (k + 1 < cells.size()) text.append(width[k] - cells[k].size(), ' ');
    }
    os << text << '\n';
  };
  if (!t.headers.empty()) {
    line(t.headers);
    std::vector<std::string> rule;
    for (std::size_t w : width) rule.emplace_back(w, '-');
    line(rule);
  }
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string Bool(bool v) { return v ? "true" : "false"; }

std::string OptBool(const std::optional<bool>& v) {
  return v ? Bool(*v) : "n/a";
}

std::string PairString(CounterPair p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

void CheckSidesArg(int n) {
  if (n < 1) {
    throw DiceError(ErrorCode::kInvalidSides,
                    "--n must be positive, got " + std::to_string(n));
  }
}

CommandOutput EnumCommand(int n, bool count_only) {
  CheckSidesArg(n);
  CommandOutput out;
  if (count_only) {
    const std::uint64_t count = CountDice(n);
    out.json = std::to_string(count) + "\n";
    out.table = {{"n = " + std::to_string(n)}, {"count"},
                 {{std::to_string(count)}}};
    return out;
  }
  out.table.headers = {"die"};
  out.table.summary = {"n = " + std::to_string(n)};
  for (const Die& d : DieSpace(n)) {
    out.json += ToJson(d).dump() + "\n";
    out.table.rows.push_back({d.ToString()});
  }
  out.table.summary.push_back(std::to_string(out.table.rows.size()) + " dice");
  return out;
}

CommandOutput PayoffCommand(const std::string& a_literal,
                            const std::string& b_literal) {
  const Die a = ParseDie(a_literal);
  const Die b = ParseDie(b_literal);
  const PairTally t = Tally(a, b);
  const Rational p = Payoff(a, b);
  CommandOutput out;
  out.json = PayoffJson(t, p).dump() + "\n";
  out.table = {{a.ToString() + " vs " + b.ToString() + ": " +
                OutcomeName(Beats(a, b))},
               {"wins", "ties", "losses", "payoff"},
               {{std::to_string(t.wins), std::to_string(t.ties),
                 std::to_string(t.losses), FormatRational(p)}}};
  return out;
}

std::vector<std::string> CertificateRow(const CounterCertificate& c) {
  return {c.target.ToString(), PairString(c.pair), c.counter.ToString(),
          std::to_string(c.gain), FormatRational(c.payoff)};
}

CommandOutput CounterCommand(const std::string& literal, bool all, bool rank,
                             int workers) {
  const Die target = ParseDie(literal);
  CommandOutput out;
  if (rank) {
    const std::vector<RankedDie> ranked = RankOneStepDice(target, workers);
    Json doc = Json::array();
    out.table.summary = {"one-step dice ranked against " + target.ToString()};
    out.table.headers = {"die", "pair", "gain", "payoff", "outcome"};
    for (const RankedDie& r : ranked) {
      Json entry = ToJson(r);
      out.table.rows.push_back({r.die.ToString(), PairString(r.pair),
                                std::to_string(r.gain),
                                FormatRational(r.payoff),
                                entry["outcome"].get<std::string>()});
      doc.push_back(std::move(entry));
    }
    out.json = doc.dump() + "\n";
    return out;
  }
  out.table.headers = {"target", "pair", "counter", "gain", "payoff"};
  if (all) {
    Json doc = Json::array();
    for (const CounterCertificate& c : AllOneStepCounters(target, workers)) {
      doc.push_back(ToJson(c));
      out.table.rows.push_back(CertificateRow(c));
    }
    out.json = doc.dump() + "\n";
    out.table.summary = {std::to_string(out.table.rows.size()) +
                         " winning one-step dice against " +
                         target.ToString()};
    return out;
  }
  const CounterCertificate c = ConstructCounter(target);
  out.json = ToJson(c).dump() + "\n";
  out.table.rows.push_back(CertificateRow(c));
  return out;
}

CommandOutput NashCommand(int n, int workers) {
  CheckSidesArg(n);
  const EquilibriumReport report = FindPureNash(n, workers);
  CommandOutput out;
  out.json = ToJson(report).dump() + "\n";
  out.table.summary = {"n = " + std::to_string(n) + ", " +
                       std::to_string(report.space_size) + " dice, " +
                       std::to_string(report.equilibria.size()) +
                       " pure equilibria, unique standard: " +
                       Bool(report.unique_standard)};
  out.table.headers = {"a", "b"};
  for (const auto& [a, b] : report.equilibria) {
    out.table.rows.push_back({a.ToString(), b.ToString()});
  }
  // Uniqueness is only claimed from four sides up; below that the standard
  // pair must still be an equilibrium.
  const Die s = Die::Standard(n);
  const bool has_standard =
      std::ranges::find(report.equilibria, std::pair{s, s}) !=
      report.equilibria.end();
  if (!has_standard || (n >= 4 && !report.unique_standard)) {
    out.exit_code = kExitFalsified;
  }
  return out;
}

CommandOutput ConnectivityCommand(int n) {
  CheckSidesArg(n);
  const bool connected = VerifyOneStepConnectivity(n);
  const std::uint64_t size = CountDice(n);
  CommandOutput out;
  out.json = Json{{"n", n}, {"space_size", size}, {"connected", connected}}
                 .dump() +
             "\n";
  out.table = {{}, {"n", "space_size", "connected"},
               {{std::to_string(n), std::to_string(size), Bool(connected)}}};
  if (!connected) out.exit_code = kExitFalsified;
  return out;
}

CommandOutput GraphCommand(int n, std::optional<int> cycle_length,
                           int workers) {
  CheckSidesArg(n);
  const BeatsDigraph graph = BuildBeatsDigraph(n, workers);
  const std::size_t s = graph.IndexOf(Die::Standard(n));
  const bool isolated =
      graph.InDegree(s) == 0 && graph.Successors(s).empty();

  Json doc = ToJson(graph);
  doc["edge_count"] = graph.EdgeCount();
  doc["standard_isolated"] = isolated;
  CommandOutput out;
  out.table.summary = {"n = " + std::to_string(n) + ", " +
                       std::to_string(graph.size()) + " dice, " +
                       std::to_string(graph.EdgeCount()) +
                       " beats edges, standard die isolated: " +
                       Bool(isolated)};
  if (cycle_length) {
    const auto cycles = FindNontransitiveCycles(graph, *cycle_length);
    Json list = Json::array();
    out.table.headers = {"cycle"};
    for (const auto& cycle : cycles) {
      Json c = Json::array();
      std::string text;
      for (const Die& d : cycle) {
        c.push_back(ToJson(d));
        text += d.ToString() + " > ";
      }
      text += cycle.front().ToString();
      list.push_back(std::move(c));
      out.table.rows.push_back({text});
    }
    doc["cycle_length"] = *cycle_length;
    doc["cycles"] = std::move(list);
    out.table.summary.push_back(std::to_string(cycles.size()) + " cycles of length " +
                                std::to_string(*cycle_length));
  } else {
    out.table.headers = {"winner", "loser"};
    for (std::size_t a = 0; a < graph.size(); ++a) {
      for (std::size_t b : graph.Successors(a)) {
        out.table.rows.push_back(
            {graph.nodes()[a].ToString(), graph.nodes()[b].ToString()});
      }
    }
  }
  out.json = doc.dump() + "\n";
  if (!isolated) out.exit_code = kExitFalsified;
  return out;
}

CommandOutput VerifyAllCommand(int max_n, int workers) {
  CheckSidesArg(max_n);
  const VerificationSuiteReport report = RunVerificationSuite(max_n, workers);
  CommandOutput out;
  Json rows = Json::array();
  out.table.headers = {"n",         "space_size", "neutrality",
                       "xi_char",   "counter",    "one_step_counter",
                       "connected", "nash",       "pass"};
  auto opt_json = [](const std::optional<bool>& v) -> Json {
    return v ? Json(*v) : Json(nullptr);
  };
  for (const SuiteRow& r : report.rows) {
    rows.push_back(Json{{"n", r.sides},
                        {"space_size", r.space_size},
                        {"standard_neutrality", r.standard_neutrality},
                        {"xi_characterization", opt_json(r.xi_characterization)},
                        {"counter_totality", opt_json(r.counter_totality)},
                        {"one_step_counter_exists",
                         opt_json(r.one_step_counter_exists)},
                        {"connectivity", r.connectivity},
                        {"nash", r.nash},
                        {"pass", r.Passed()}});
    out.table.rows.push_back(
        {std::to_string(r.sides), std::to_string(r.space_size),
         Bool(r.standard_neutrality), OptBool(r.xi_characterization),
         OptBool(r.counter_totality), OptBool(r.one_step_counter_exists),
         Bool(r.connectivity), Bool(r.nash), Bool(r.Passed())});
  }
  out.json = Json{{"max_n", max_n}, {"results", std::move(rows)},
                  {"pass", report.Passed()}}
                 .dump() +
             "\n";
  out.table.summary = {std::string("overall: ") +
                       (report.Passed() ? "PASS" : "FAIL")};
  if (!report.Passed()) out.exit_code = kExitFalsified;
  return out;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInternalExhaustion:
    case ErrorCode::kBeatVerificationFailed:
      return kExitFalsified;
    default:
      return kExitValidation;
  }
}

void ReportError(std::ostream& err, std::string_view kind,
                 const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact analysis of the n-sided dice game", "dicelab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  std::string output_path;
  int workers = 1;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--output", output_path, "Write output to this file");
  app.add_option("--workers", workers, "Worker threads for tournament scans")
      ->check(CLI::Range(1, 256));

  int n = 0;
  bool count_only = false;
  auto* enum_cmd = app.add_subcommand("enum", "List every n-sided die");
  enum_cmd->add_option("--n", n, "Number of sides")->required();
  enum_cmd->add_flag("--count-only", count_only, "Print only the count");

  std::string a_literal;
  std::string b_literal;
  auto* payoff_cmd = app.add_subcommand("payoff", "Exact payoff of a vs b");
  payoff_cmd->add_option("--a", a_literal, "Die literal, e.g. [1,1,4,4]")
      ->required();
  payoff_cmd->add_option("--b", b_literal, "Die literal")->required();

  std::string die_literal;
  bool all = false;
  bool rank = false;
  auto* counter_cmd =
      app.add_subcommand("counter", "Construct a die that beats the given die");
  counter_cmd->add_option("--die", die_literal, "Die literal")->required();
  counter_cmd->add_flag("--all", all, "Every winning one-step die");
  counter_cmd->add_flag("--rank", rank, "Rank every one-step die");

  auto* nash_cmd =
      app.add_subcommand("nash", "Exhaustive pure-equilibrium search");
  nash_cmd->add_option("--n", n, "Number of sides")->required();

  auto* conn_cmd = app.add_subcommand(
      "connectivity", "Check that one-steps connect the die space");
  conn_cmd->add_option("--n", n, "Number of sides")->required();

  std::optional<int> cycle_length;
  auto* graph_cmd = app.add_subcommand("graph", "Beats digraph over D_n");
  graph_cmd->add_option("--n", n, "Number of sides")->required();
  graph_cmd->add_option("--cycles", cycle_length, "Also list cycles (3..5)")
      ->check(CLI::Range(3, 5));

  int max_n = 6;
  auto* verify_cmd =
      app.add_subcommand("verify-all", "Run every check for n = 1..max-n");
  verify_cmd->add_option("--max-n", max_n, "Largest n to check")
      ->capture_default_str();

  std::vector<const char*> argv{"dicelab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format format = format_name == "csv"      ? Format::kCsv
                        : format_name == "pretty" ? Format::kPretty
                                                  : Format::kJson;
  CommandOutput result;
  try {
    if (*enum_cmd) {
      result = EnumCommand(n, count_only);
    } else if (*payoff_cmd) {
      result = PayoffCommand(a_literal, b_literal);
    } else if (*counter_cmd) {
      result = CounterCommand(die_literal, all, rank, workers);
    } else if (*nash_cmd) {
      result = NashCommand(n, workers);
    } else if (*conn_cmd) {
      result = ConnectivityCommand(n);
    } else if (*graph_cmd) {
      result = GraphCommand(n, cycle_length, workers);
    } else if (*verify_cmd) {
      result = VerifyAllCommand(max_n, workers);
    }
  } catch (const DiceError& e) {
    ReportError(err, ErrorCodeName(e.code()), e.what());
    return ExitCodeFor(e.code());
  }

  std::string text;
  switch (format) {
    case Format::kJson: text = result.json; break;
    case Format::kCsv: text = RenderCsv(result.table); break;
    case Format::kPretty: text = RenderPretty(result.table); break;
  }
  if (output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    file << text;
    if (!file) {
      ReportError(err, "IoError", "cannot write " + output_path);
      return kExitUsage;
    }
  }
  return result.exit_code;
}

}  // namespace dicelab
