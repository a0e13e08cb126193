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

#ifndef ORDINAL_REPORT_JSON_HPP_
#define ORDINAL_REPORT_JSON_HPP_

#include <string>

#include "ordinal/epistemic.hpp"
#include "ordinal/json_io.hpp"
#include "ordinal/knowledge.hpp"
#include "ordinal/limits.hpp"
#include "ordinal/solvers.hpp"
#include "ordinal/suite.hpp"

namespace ordinal {

inline Json family_to_json(const Game& game, const Family& family) {
  Json j = Json::object();
  for (int i = 0; i < game.num_players(); ++i) {
    Json list = Json::array();
    for (int a : family[i]) list.push_back(game.actions[i][a]);
    j[game.players[i]] = list;
  }
  return j;
}

inline Json profile_to_json(const Game& game, const Profile& p) {
  Json j = Json::array();
  for (int i = 0; i < game.num_players(); ++i)
    j.push_back(game.actions[i][p[i]]);
  return j;
}

inline Json opp_profile_to_json(const Game& game, int player,
                                const OppProfile& opp) {
  Json j = Json::array();
  int k = 0;
  for (int i = 0; i < game.num_players(); ++i)
    if (i != player) j.push_back(game.actions[i][opp[k++]]);
  return j;
}

inline Json belief_to_json(const Game& game, int player,
                           const std::vector<OppProfile>& belief) {
  Json j = Json::array();
  for (const auto& opp : belief) j.push_back(opp_profile_to_json(game, player, opp));
  return j;
}

inline Json witness_to_json(const Game& game, const DominanceWitness& w) {
  Json j;
  switch (w.kind) {
    case DominanceWitness::Kind::kWeakPure: j["type"] = "weak-pure"; break;
    case DominanceWitness::Kind::kStrictPure: j["type"] = "strict-pure"; break;
    case DominanceWitness::Kind::kStrictMixed: j["type"] = "strict-mixed"; break;
    case DominanceWitness::Kind::kBorgers: j["type"] = "subset-weak"; break;
  }
  j["player"] = game.players[w.player];
  j["dominated"] = game.actions[w.player][w.dominated];
  if (w.pure_dominator)
    j["dominator"] = game.actions[w.player][*w.pure_dominator];
  if (w.mixed_dominator) {
    Json mix = Json::object();
    for (const auto& [a, weight] : w.mixed_dominator->weights)
      mix[game.actions[w.player][a]] = rational_to_string(weight);
    j["mixture"] = mix;
  }
  j["restriction"] = belief_to_json(game, w.player, w.restriction);
  if (w.kind == DominanceWitness::Kind::kBorgers) {
    Json subsets = Json::array();
    for (const auto& [subset, dominator] : w.subset_dominators) {
      Json entry;
      entry["subset"] = belief_to_json(game, w.player, subset);
      entry["dominator"] = game.actions[w.player][dominator];
      subsets.push_back(entry);
    }
    j["subsets"] = subsets;
  }
  return j;
}

inline Json trace_to_json(const Game& game, const Trace& trace) {
  Json j;
  j["concept"] = concept_tag(trace.concept_tag_value);
  Json rounds = Json::array();
  if (trace.profile_level()) {
    for (const auto& round : trace.profile_rounds) {
      Json r = Json::array();
      for (const Profile& p : round) r.push_back(profile_to_json(game, p));
      rounds.push_back(r);
    }
  } else {
    for (const auto& round : trace.rounds)
      rounds.push_back(family_to_json(game, round));
  }
  j["rounds"] = rounds;
  j["fixed_point_round"] = trace.fixed_point_round;
  Json justifications = Json::array();
  for (const auto& e : trace.eliminations) {
    Json entry;
    entry["kind"] = "eliminated";
    entry["round"] = e.round;
    if (trace.profile_level()) {
      entry["profile"] = profile_to_json(game, e.profile);
      entry["failing_player"] = game.players[e.failing_player];
    } else {
      entry["player"] = game.players[e.player];
      entry["action"] = game.actions[e.player][e.action];
    }
    if (e.witness)
      entry["witness"] = witness_to_json(game, *e.witness);
    else
      entry["reason"] = "no-supporting-belief";
    justifications.push_back(entry);
  }
  for (const auto& c : trace.certificates) {
    Json entry;
    entry["kind"] = "survived";
    entry["round"] = c.round;
    if (trace.profile_level()) {
      entry["profile"] = profile_to_json(game, c.profile);
      Json w = Json::array();
      for (int i = 0; i < game.num_players(); ++i)
        w.push_back(opp_profile_to_json(game, i, c.wt_witnesses[i]));
      entry["witnesses"] = w;
    } else {
      entry["player"] = game.players[c.player];
      entry["action"] = game.actions[c.player][c.action];
      if (c.undominated)
        entry["reason"] = "undominated";
      else
        entry["belief"] = belief_to_json(game, c.player, c.belief);
    }
    justifications.push_back(entry);
  }
  j["justifications"] = justifications;
  return j;
}

inline Json relations_to_json(const Game& game, const RelationReport& report) {
  Json j;
  j["generic"] = report.generic;
  j["horizon"] = report.horizon;
  Json tags = Json::array();
  for (SolutionConcept c : RelationReport::kActionConcepts)
    tags.push_back(concept_tag(c));
  j["concepts"] = tags;
  Json rounds = Json::array();
  for (int m = 0; m < report.horizon; ++m) {
    Json cell;
    cell["inclusion"] = report.inclusion[m];
    cell["yr_in_pr"] = static_cast<bool>(report.wishful_in_point[m]);
    rounds.push_back(cell);
  }
  j["rounds"] = rounds;
  Json witnesses = Json::array();
  for (const auto& w : report.noninclusion_witnesses) {
    Json entry;
    entry["round"] = w.round;
    entry["from"] = concept_tag(RelationReport::kActionConcepts[w.from]);
    entry["to"] = concept_tag(RelationReport::kActionConcepts[w.to]);
    entry["player"] = game.players[w.player];
    entry["action"] = game.actions[w.player][w.action];
    witnesses.push_back(entry);
  }
  j["noninclusion_witnesses"] = witnesses;
  j["violations"] = report.violations;
  Json fixed = Json::object();
  for (std::size_t c = 0; c < RelationReport::kActionConcepts.size(); ++c)
    fixed[concept_tag(RelationReport::kActionConcepts[c])] =
        family_to_json(game, report.traces[c].fixed_family());
  {
    Json yr = Json::array();
    for (const Profile& p : report.traces.back().fixed_profiles())
      yr.push_back(profile_to_json(game, p));
    fixed["yr"] = yr;
  }
  j["fixed_points"] = fixed;
  return j;
}

inline Json convergence_to_json(const Game& game,
                                const ConvergenceReport& report) {
  Json j;
  j["exponents"] = report.exponents;
  Json sets = Json::array();
  for (const auto& family : report.mixed_fixed_points)
    sets.push_back(family_to_json(game, family));
  j["tr_fixed_points"] = sets;
  j["monotone"] = report.monotone;
  j["stabilized_at_exponent"] =
      report.exponents.empty() ? Json() : Json(report.exponents[report.stabilized_at]);
  j["contained_in_br_base"] = report.contained_in_borgers;
  j["br_base"] = family_to_json(game, report.borgers_base);
  j["wr_base"] = family_to_json(game, report.maxmin_base);
  j["wr_limit"] = family_to_json(game, report.maxmin_of_limit);
  Json inclusions = Json::array();
  static const char* kSetNames[] = {"tr_last", "br_base", "wr_limit", "wr_base"};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (x != y) {
        Json entry;
        entry["from"] = kSetNames[x];
        entry["to"] = kSetNames[y];
        entry["holds"] = report.inclusions[x][y];
        inclusions.push_back(entry);
      }
  j["inclusions"] = inclusions;
  j["violations"] = report.violations;
  return j;
}

inline Json inclusion_report_to_json(const InclusionReport& report) {
  Json j;
  j["attitude"] = attitude_tag(report.attitude);
  j["holds"] = report.holds;
  j["equals"] = report.equals;
  j["limit_holds"] = report.limit_holds;
  j["limit_equals"] = report.limit_equals;
  j["violations"] = report.violations;
  return j;
}

inline Json wt_report_to_json(const WtReport& report) {
  Json j;
  j["holds"] = report.holds;
  j["equals"] = report.equals;
  j["limit_holds"] = report.limit_holds;
  j["violations"] = report.violations;
  return j;
}

inline Json product_report_to_json(const ProductTrivialityReport& report) {
  Json j;
  j["precondition_ok"] = report.precondition_ok;
  j["exhaustive"] = report.exhaustive;
  j["events_checked"] = report.events_checked;
  j["violations"] = report.violations;
  return j;
}

inline Json suite_result_to_json(const SuiteResult& result) {
  Json j;
  j["games_run"] = result.games_run;
  j["failures"] = result.failures;
  j["reproducers"] = result.reproducer_files;
  return j;
}

}  // namespace ordinal

#endif  // ORDINAL_REPORT_JSON_HPP_
