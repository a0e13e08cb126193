// Copyright 2026 The Ordlab Authors.
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

// Command-line surface: solve, relations, epistemic {check|witness|wt-check|
// product-check}, limit, random, suite. Exit codes: 0 success, 2 input
// validation failure, 3 internal invariant violation. All stdout payloads
// are deterministic given inputs, flags and seed; timing goes to stderr.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordinal/epistemic_io.hpp"
#include "ordinal/generator.hpp"
#include "ordinal/report_json.hpp"

namespace {

using namespace ordinal;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct Output {
  std::string command;
  std::string format = "table";
  std::map<std::string, std::string> input_digests;
  std::vector<std::pair<std::string, bool>> checks;
  Json payload;
  std::vector<std::string> table_lines;

  void digest(const std::string& path) {
    input_digests[path] = fnv1a_digest(read_file(path));
  }

  bool all_checks_pass() const {
    for (const auto& [name, pass] : checks)
      if (!pass) return false;
    return true;
  }

  void emit() const {
    if (format == "json") {
      Json report;
      report["command"] = command;
      Json inputs = Json::object();
      for (const auto& [path, digest] : input_digests) inputs[path] = digest;
      report["inputs"] = inputs;
      Json check_list = Json::array();
      for (const auto& [name, pass] : checks) {
        Json c;
        c["name"] = name;
        c["pass"] = pass;
        check_list.push_back(c);
      }
      report["checks"] = check_list;
      report["output"] = payload;
      std::cout << report.dump(2) << "\n";
    } else {
      for (const auto& line : table_lines) std::cout << line << "\n";
      for (const auto& [name, pass] : checks)
        std::cout << (pass ? "[ok]   " : "[FAIL] ") << name << "\n";
    }
  }
};

int fail_input(const std::vector<std::string>& errors) {
  for (const auto& e : errors) std::cerr << "error: " << e << "\n";
  return kExitInput;
}

std::string family_line(const Game& game, const Family& family) {
  std::string line;
  for (int i = 0; i < game.num_players(); ++i) {
    if (i) line += "  ";
    line += game.players[i] + ": {";
    for (std::size_t k = 0; k < family[i].size(); ++k) {
      if (k) line += ", ";
      line += game.actions[i][family[i][k]];
    }
    line += "}";
  }
  return line;
}

std::string profiles_line(const Game& game, const std::vector<Profile>& profiles) {
  std::string line = "{";
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    if (k) line += ", ";
    line += "(";
    for (int i = 0; i < game.num_players(); ++i) {
      if (i) line += ",";
      line += game.actions[i][profiles[k][i]];
    }
    line += ")";
  }
  return line + "}";
}

// Matrix view for two-player games, row player first, as in the figures.
void append_matrix(const Game& game, std::vector<std::string>* lines) {
  if (game.num_players() != 2) return;
  std::string header = "      ";
  for (const auto& col : game.actions[1]) header += col + "\t";
  lines->push_back(header);
  for (int r = 0; r < game.num_actions(0); ++r) {
    std::string line = game.actions[0][r] + "    ";
    for (int c = 0; c < game.num_actions(1); ++c) {
      Profile p = {r, c};
      line += rational_to_string(game.payoff(0, p)) + "," +
              rational_to_string(game.payoff(1, p)) + "\t";
    }
    lines->push_back(line);
  }
}

int run_solve(const std::string& game_path, const std::string& concept_name,
              bool with_trace, Output* out) {
  GameParse parsed = load_game_file(game_path);
  if (!parsed.ok) return fail_input(parsed.errors);
  out->digest(game_path);
  const auto concept_id = concept_from_tag(concept_name);
  if (!concept_id) return fail_input({"unknown concept " + concept_name});
  const Game& game = parsed.game;
  Trace trace = solve(game, *concept_id);
  const auto problems = verify_trace(game, trace);
  out->checks.emplace_back("trace verifies", problems.empty());
  if (with_trace) {
    out->payload = trace_to_json(game, trace);
  } else {
    Json slim;
    slim["concept"] = concept_tag(trace.concept_tag_value);
    slim["fixed_point_round"] = trace.fixed_point_round;
    if (trace.profile_level()) {
      Json profs = Json::array();
      for (const Profile& p : trace.fixed_profiles())
        profs.push_back(profile_to_json(game, p));
      slim["fixed_point"] = profs;
    } else {
      slim["fixed_point"] = family_to_json(game, trace.fixed_family());
    }
    out->payload = slim;
  }
  out->table_lines.push_back("concept: " + concept_name);
  if (with_trace) {
    const std::size_t n_rounds = trace.profile_level()
                                     ? trace.profile_rounds.size()
                                     : trace.rounds.size();
    for (std::size_t m = 0; m < n_rounds; ++m)
      out->table_lines.push_back(
          "round " + std::to_string(m) + ":  " +
          (trace.profile_level()
               ? profiles_line(game, trace.profile_rounds[m])
               : family_line(game, trace.rounds[m])));
  }
  out->table_lines.push_back(
      "fixed point (round " + std::to_string(trace.fixed_point_round) + "):  " +
      (trace.profile_level() ? profiles_line(game, trace.fixed_profiles())
                             : family_line(game, trace.fixed_family())));
  for (const auto& p : problems) std::cerr << "invariant: " << p << "\n";
  return problems.empty() ? kExitOk : kExitInvariant;
}

int run_relations(const std::string& game_path, Output* out) {
  GameParse parsed = load_game_file(game_path);
  if (!parsed.ok) return fail_input(parsed.errors);
  out->digest(game_path);
  const Game& game = parsed.game;
  RelationReport report = relations(game);
  out->payload = relations_to_json(game, report);
  out->checks.emplace_back("claimed inclusions hold", report.violations.empty());
  append_matrix(game, &out->table_lines);
  for (std::size_t c = 0; c < RelationReport::kActionConcepts.size(); ++c)
    out->table_lines.push_back(
        std::string(concept_tag(RelationReport::kActionConcepts[c])) +
        " fixed point:  " + family_line(game, report.traces[c].fixed_family()));
  out->table_lines.push_back(
      "yr fixed point:  " +
      profiles_line(game, report.traces.back().fixed_profiles()));
  std::set<std::pair<int, int>> seen;
  for (const auto& w : report.noninclusion_witnesses) {
    if (!seen.insert({w.from, w.to}).second) continue;  // first round only
    out->table_lines.push_back(
        "not included: " +
        std::string(concept_tag(RelationReport::kActionConcepts[w.from])) +
        " outside " +
        std::string(concept_tag(RelationReport::kActionConcepts[w.to])) +
        " at round " + std::to_string(w.round) + " (witness " +
        game.players[w.player] + ":" + game.actions[w.player][w.action] + ")");
  }
  for (const auto& v : report.violations) std::cerr << "invariant: " << v << "\n";
  return report.violations.empty() ? kExitOk : kExitInvariant;
}

int run_epistemic_check(const std::string& structure_path,
                        const std::string& attitude_name,
                        std::optional<int> depth, Output* out) {
  StructureParse parsed = load_structure_file(structure_path);
  if (!parsed.ok) return fail_input(parsed.errors);
  if (parsed.is_knowledge)
    return fail_input({"expected a possibility structure (no \"states\")"});
  out->digest(structure_path);
  const auto attitude = attitude_from_tag(attitude_name);
  if (!attitude) return fail_input({"unknown attitude " + attitude_name});
  const PossibilityStructure& ps = parsed.possibility;
  InclusionReport report = check_inclusion_theorem(ps, *attitude);
  out->payload = inclusion_report_to_json(report);
  if (depth) {
    const BeliefChain chain =
        common_belief_chain(ps, attitude_event(ps, *attitude), depth);
    Json levels = Json::array();
    for (const Event& level : chain.levels) {
      ActionProjection proj = project_actions(level);
      levels.push_back(proj.empty ? Json(Json::array())
                                  : family_to_json(ps.game, proj.per_player));
    }
    out->payload["projected_levels"] = levels;
  }
  out->checks.emplace_back("inclusion holds at every level", report.all_hold());
  for (std::size_t n = 0; n < report.holds.size(); ++n)
    out->table_lines.push_back(
        "level " + std::to_string(n) + ": " +
        (report.holds[n] ? (report.equals[n] ? "equal" : "strictly included")
                         : "VIOLATED"));
  out->table_lines.push_back(std::string("limit: ") +
                             (report.limit_holds
                                  ? (report.limit_equals ? "equal"
                                                         : "strictly included")
                                  : "VIOLATED"));
  return report.all_hold() ? kExitOk : kExitInvariant;
}

int run_epistemic_witness(const std::string& game_path,
                          const std::string& attitude_name,
                          const std::string& out_path, Output* out) {
  GameParse parsed = load_game_file(game_path);
  if (!parsed.ok) return fail_input(parsed.errors);
  out->digest(game_path);
  const auto attitude = attitude_from_tag(attitude_name);
  if (!attitude || *attitude == Attitude::kOptimisticPointBelief)
    return fail_input({"witness attitude must be opt, pes or adm"});
  PossibilityStructure ps = build_witness_structure(parsed.game, *attitude);
  const InclusionReport report = check_inclusion_theorem(ps, *attitude);
  write_file(out_path, possibility_to_json(ps).dump(2) + "\n");
  out->checks.emplace_back("witness structure validates", ps.validate().empty());
  out->checks.emplace_back("witness achieves equality",
                           report.all_hold() && report.limit_equals);
  out->payload = inclusion_report_to_json(report);
  out->payload["written"] = out_path;
  out->table_lines.push_back("witness structure written to " + out_path);
  for (int i = 0; i < ps.game.num_players(); ++i)
    out->table_lines.push_back(ps.game.players[i] + ": " +
                               std::to_string(ps.types[i].size()) + " types");
  return out->all_checks_pass() ? kExitOk : kExitInvariant;
}

int run_epistemic_wt(const std::string& structure_path, Output* out) {
  StructureParse parsed = load_structure_file(structure_path);
  if (!parsed.ok) return fail_input(parsed.errors);
  if (!parsed.is_knowledge)
    return fail_input({"expected a knowledge structure (with \"states\")"});
  out->digest(structure_path);
  WtReport report = check_wt_theorem(parsed.knowledge);
  out->payload = wt_report_to_json(report);
  out->checks.emplace_back("knowledge inclusion holds at every level",
                           report.all_hold());
  for (std::size_t n = 0; n < report.holds.size(); ++n)
    out->table_lines.push_back(
        "level " + std::to_string(n) + ": " +
        (report.holds[n] ? (report.equals[n] ? "equal" : "strictly included")
                         : "VIOLATED"));
  return report.all_hold() ? kExitOk : kExitInvariant;
}

int run_epistemic_product(const std::string& structure_path, Output* out) {
  StructureParse parsed = load_structure_file(structure_path);
  if (!parsed.ok) return fail_input(parsed.errors);
  if (!parsed.is_knowledge)
    return fail_input({"expected a knowledge structure (with \"states\")"});
  out->digest(structure_path);
  ProductTrivialityReport report = product_triviality_check(parsed.knowledge);
  out->payload = product_report_to_json(report);
  if (!report.precondition_ok)
    return fail_input({"state space is not the full product"});
  out->checks.emplace_back("only the full interactive event is known",
                           report.passed());
  out->table_lines.push_back("events checked: " +
                             std::to_string(report.events_checked) +
                             (report.exhaustive ? " (exhaustive)" : " (sampled)"));
  return report.passed() ? kExitOk : kExitInvariant;
}

int run_limit(const std::string& game_path, const std::string& r_list,
              Output* out) {
  GameParse parsed = load_game_file(game_path);
  if (!parsed.ok) return fail_input(parsed.errors);
  out->digest(game_path);
  std::vector<int> rs;
  for (std::size_t pos = 0; pos < r_list.size();) {
    std::size_t comma = r_list.find(',', pos);
    if (comma == std::string::npos) comma = r_list.size();
    try {
      rs.push_back(std::stoi(r_list.substr(pos, comma - pos)));
    } catch (...) {
      return fail_input({"bad exponent list: " + r_list});
    }
    pos = comma + 1;
  }
  if (rs.empty() || rs.front() < 1)
    return fail_input({"exponents must be positive integers"});
  for (std::size_t k = 1; k < rs.size(); ++k)
    if (rs[k] <= rs[k - 1])
      return fail_input({"exponent list must be strictly ascending"});
  const Game& game = parsed.game;
  ConvergenceReport report = convergence_experiment(game, rs);
  out->payload = convergence_to_json(game, report);
  out->checks.emplace_back("fixed points monotone in the exponent",
                           report.monotone);
  out->checks.emplace_back("fixed points inside the admissibility limit",
                           report.contained_in_borgers);
  for (std::size_t k = 0; k < rs.size(); ++k)
    out->table_lines.push_back(
        "r=" + std::to_string(rs[k]) + ":  " +
        family_line(game, report.mixed_fixed_points[k]));
  out->table_lines.push_back("br base:   " +
                             family_line(game, report.borgers_base));
  out->table_lines.push_back("wr base:   " +
                             family_line(game, report.maxmin_base));
  out->table_lines.push_back("wr limit:  " +
                             family_line(game, report.maxmin_of_limit));
  return report.violations.empty() ? kExitOk : kExitInvariant;
}

int run_random(std::uint64_t seed, int players, const std::string& actions,
               bool generic, long vmin, long vmax, const std::string& out_path,
               Output* out) {
  GeneratorConfig config;
  config.seed = seed;
  config.generic = generic;
  config.value_min = vmin;
  config.value_max = vmax;
  config.action_counts.clear();
  if (!actions.empty()) {
    for (std::size_t pos = 0; pos < actions.size();) {
      std::size_t comma = actions.find(',', pos);
      if (comma == std::string::npos) comma = actions.size();
      try {
        config.action_counts.push_back(
            std::stoi(actions.substr(pos, comma - pos)));
      } catch (...) {
        return fail_input({"bad action count list: " + actions});
      }
      pos = comma + 1;
    }
  } else {
    config.action_counts.assign(players < 2 ? 2 : players, 3);
  }
  const auto errors = config.validate();
  if (!errors.empty()) return fail_input(errors);
  Game game = random_game(config);
  out->payload = game_to_json(game);
  if (!out_path.empty()) {
    write_file(out_path, out->payload.dump(2) + "\n");
    out->table_lines.push_back("game written to " + out_path);
  }
  append_matrix(game, &out->table_lines);
  out->checks.emplace_back("generated game validates", game.validate().empty());
  if (config.generic)
    out->checks.emplace_back("generated game is generic",
                             is_generic(game).overall);
  return kExitOk;
}

int run_suite(int count, std::uint64_t seed, int players, int max_actions,
              const std::string& reproducer_dir, const std::string& replay,
              Output* out) {
  SuiteResult result;
  if (!replay.empty()) {
    GameParse parsed = load_game_file(replay);
    if (!parsed.ok) return fail_input(parsed.errors);
    out->digest(replay);
    Rng rng(seed ^ 0xFEDCBA);
    result.games_run = 1;
    for (const auto& f : property_battery(parsed.game, &rng))
      result.failures.push_back("replay: " + f);
  } else {
    SuiteConfig config;
    config.count = count;
    config.seed = seed;
    config.players = players;
    config.max_actions = max_actions;
    config.reproducer_dir = reproducer_dir;
    result = run_property_suite(config);
  }
  out->payload = suite_result_to_json(result);
  out->checks.emplace_back("property battery", result.passed());
  out->table_lines.push_back("games run: " + std::to_string(result.games_run));
  for (const auto& f : result.failures) out->table_lines.push_back("FAIL " + f);
  for (const auto& r : result.reproducer_files)
    out->table_lines.push_back("reproducer: " + r);
  return result.passed() ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and epistemic model checker for finite ordinal games"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", seed, "64-bit seed for randomized commands");

  std::string game_path, concept_name = "pr", structure_path, attitude = "opt";
  std::string out_path, r_list = "1,2,4,8", actions_list, reproducer_dir, replay;
  bool with_trace = false, generic = false;
  int players = 2, count = 100, max_actions = 4, depth = -1;
  long vmin = 0, vmax = 9;

  auto* solve_cmd = app.add_subcommand("solve", "run one iterated procedure");
  solve_cmd->add_option("--game", game_path, "game file")->required();
  solve_cmd->add_option("--concept", concept_name,
                        "pr | wr | br | yr | tr | iesd")
      ->required();
  solve_cmd->add_flag("--trace", with_trace, "print every round");

  auto* relations_cmd =
      app.add_subcommand("relations", "cross-concept inclusion report");
  relations_cmd->add_option("--game", game_path, "game file")->required();

  auto* epistemic_cmd = app.add_subcommand("epistemic", "structure checks");
  epistemic_cmd->require_subcommand(1);
  auto* check_cmd = epistemic_cmd->add_subcommand(
      "check", "belief-chain projection against the matching procedure");
  check_cmd->add_option("--structure", structure_path, "possibility structure")
      ->required();
  check_cmd->add_option("--attitude", attitude, "opt | pes | adm | optdeg");
  check_cmd->add_option("--depth", depth, "also list projected chain levels");
  auto* witness_cmd = epistemic_cmd->add_subcommand(
      "witness", "construct an equality-achieving structure");
  witness_cmd->add_option("--game", game_path, "game file")->required();
  witness_cmd->add_option("--attitude", attitude, "opt | pes | adm");
  witness_cmd->add_option("--out", out_path, "output structure file")
      ->required();
  auto* wt_cmd = epistemic_cmd->add_subcommand(
      "wt-check", "knowledge-chain projection against the profile procedure");
  wt_cmd->add_option("--structure", structure_path, "knowledge structure")
      ->required();
  auto* product_cmd = epistemic_cmd->add_subcommand(
      "product-check", "knowledge triviality on full-product state spaces");
  product_cmd->add_option("--structure", structure_path, "knowledge structure")
      ->required();

  auto* limit_cmd =
      app.add_subcommand("limit", "risk-limit convergence experiment");
  limit_cmd->add_option("--game", game_path, "game file")->required();
  limit_cmd->add_option("--r", r_list, "ascending exponent list, e.g. 1,2,4,8");

  auto* random_cmd = app.add_subcommand("random", "generate a random game");
  random_cmd->add_option("--players", players, "player count (default 2)");
  random_cmd->add_option("--actions", actions_list,
                         "per-player action counts, e.g. 3,3");
  random_cmd->add_flag("--generic", generic, "force column-distinct payoffs");
  random_cmd->add_option("--min", vmin, "smallest payoff value");
  random_cmd->add_option("--max", vmax, "largest payoff value");
  random_cmd->add_option("--out", out_path, "write the game here");

  auto* suite_cmd =
      app.add_subcommand("suite", "randomized property regression battery");
  suite_cmd->add_option("--count", count, "number of games");
  suite_cmd->add_option("--players", players, "players per game");
  suite_cmd->add_option("--max-actions", max_actions, "largest action count");
  suite_cmd->add_option("--reproducer-dir", reproducer_dir,
                        "where to dump minimized failing games");
  suite_cmd->add_option("--replay", replay, "re-run the battery on one game");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.format = format;
  for (int i = 0; i < argc; ++i) {
    if (i) out.command += " ";
    out.command += argv[i];
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (*solve_cmd) {
      code = run_solve(game_path, concept_name, with_trace, &out);
    } else if (*relations_cmd) {
      code = run_relations(game_path, &out);
    } else if (*check_cmd) {
      code = run_epistemic_check(
          structure_path, attitude,
          depth >= 0 ? std::optional<int>(depth) : std::nullopt, &out);
    } else if (*witness_cmd) {
      code = run_epistemic_witness(game_path, attitude, out_path, &out);
    } else if (*wt_cmd) {
      code = run_epistemic_wt(structure_path, &out);
    } else if (*product_cmd) {
      code = run_epistemic_product(structure_path, &out);
    } else if (*limit_cmd) {
      code = run_limit(game_path, r_list, &out);
    } else if (*random_cmd) {
      code = run_random(seed, players, actions_list, generic, vmin, vmax,
                        out_path, &out);
    } else if (*suite_cmd) {
      code = run_suite(count, seed, players, max_actions, reproducer_dir,
                       replay, &out);
    }
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  if (code != kExitInput) out.emit();
  std::cerr << "took " << elapsed.count() << " ms\n";
  return code;
}
