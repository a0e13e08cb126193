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

#ifndef ORDINAL_SUITE_HPP_
#define ORDINAL_SUITE_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "ordinal/epistemic.hpp"
#include "ordinal/generator.hpp"
#include "ordinal/json_io.hpp"
#include "ordinal/limits.hpp"
#include "ordinal/solvers.hpp"

namespace ordinal {

// The randomized regression battery: every cross-concept inclusion, trace
// certificate, coincidence and invariance property, run over freshly drawn
// games and structures. Failures are minimized to a smallest reproducing
// game and dumped as ordinary game files.

inline Game remove_action(const Game& game, int player, int action) {
  Game out;
  out.players = game.players;
  out.actions = game.actions;
  out.actions[player].erase(out.actions[player].begin() + action);
  out.payoffs.assign(game.num_players(), {});
  for (std::size_t idx = 0; idx < game.num_profiles(); ++idx) {
    const Profile p = game.profile_at(idx);
    if (p[player] == action) continue;
    for (int i = 0; i < game.num_players(); ++i)
      out.payoffs[i].push_back(game.payoffs[i][idx]);
  }
  return out;
}

// Runs every per-game property; returns failure descriptions.
inline std::vector<std::string> property_battery(const Game& game, Rng* rng,
                                                 int transforms = 3,
                                                 int structures = 1) {
  std::vector<std::string> failures;
  auto fail = [&](const std::string& what) { failures.push_back(what); };

  std::vector<Trace> traces;
  for (SolutionConcept c :
       {SolutionConcept::kPoint, SolutionConcept::kMaxmin,
        SolutionConcept::kBorgers, SolutionConcept::kMixed,
        SolutionConcept::kStrictPure, SolutionConcept::kWishful}) {
    Trace t = solve(game, c);
    for (const auto& p : verify_trace(game, t))
      fail(std::string(concept_tag(c)) + " trace: " + p);
    int bound = 1;
    for (int i = 0; i < game.num_players(); ++i)
      bound += game.num_actions(i) - 1;
    const int limit = t.profile_level()
                          ? static_cast<int>(game.num_profiles())
                          : bound;
    if (t.fixed_point_round > limit)
      fail(std::string(concept_tag(c)) + ": fixed point later than the bound");
    traces.push_back(std::move(t));
  }

  for (const auto& v : relations(game).violations) fail("relations: " + v);

  for (int i = 0; i < game.num_players(); ++i)
    for (const OppProfile& opp : opp_product(game, i)) {
      const std::vector<OppProfile> belief{opp};
      const auto o = optimistic_best_replies(game, i, belief);
      if (o != pessimistic_best_replies(game, i, belief) ||
          o != admissible_set(game, i, belief))
        fail("singleton-belief criteria disagree");
    }

  for (int k = 0; k < transforms; ++k) {
    const Game h = random_monotone_transform(game, rng);
    if (!ordinal_equivalent(game, h).equivalent) {
      fail("monotone transform left the ordinal class");
      continue;
    }
    for (std::size_t c = 0; c < traces.size(); ++c) {
      const SolutionConcept concept_id = traces[c].concept_tag_value;
      if (concept_id == SolutionConcept::kMixed) continue;
      Trace ht = solve(h, concept_id);
      const bool same = traces[c].profile_level()
                            ? ht.profile_rounds == traces[c].profile_rounds
                            : ht.rounds == traces[c].rounds;
      if (!same)
        fail(std::string(concept_tag(concept_id)) +
             ": rounds changed under a monotone transform");
    }
  }
  {
    Game affine = game;
    for (int i = 0; i < game.num_players(); ++i)
      for (auto& u : affine.payoffs[i]) u = Rational(2) * u + 3;
    if (mixed_rationalizability(affine).rounds !=
        mixed_rationalizability(game).rounds)
      fail("tr: rounds changed under a positive affine transform");
  }

  for (int i = 0; i < game.num_players(); ++i) {
    const std::size_t k = game.num_opp_profiles(i);
    if (k <= 12) {
      const auto sets = enumerate_belief_sets(game, i, game.full_family());
      if (sets.size() != (std::size_t{1} << k) - 1)
        fail("belief enumeration miscounts");
    }
  }

  for (int s = 0; s < structures; ++s) {
    const PossibilityStructure ps = random_possibility_structure(game, rng);
    if (!ps.validate().empty()) {
      fail("random structure failed validation");
      continue;
    }
    for (Attitude att :
         {Attitude::kOptimistic, Attitude::kPessimistic, Attitude::kAdmissible,
          Attitude::kOptimisticPointBelief}) {
      const auto report = check_inclusion_theorem(ps, att);
      if (!report.all_hold())
        fail(std::string("inclusion theorem failed for ") + attitude_tag(att));
    }
  }
  return failures;
}

struct SuiteConfig {
  std::uint64_t seed = 1;
  int count = 100;
  int players = 2;
  int max_actions = 4;
  long value_min = 0;
  long value_max = 9;
  int transforms_per_game = 3;
  int structures_per_game = 1;
  std::string reproducer_dir;  // empty: do not write reproducers
};

struct SuiteResult {
  int games_run = 0;
  std::vector<std::string> failures;
  std::vector<std::string> reproducer_files;

  bool passed() const { return failures.empty(); }
};

inline SuiteResult run_property_suite(const SuiteConfig& config) {
  SuiteResult result;
  Rng shape_rng(config.seed);
  for (int k = 0; k < config.count; ++k) {
    GeneratorConfig gen;
    gen.seed = config.seed * 1000003ULL + static_cast<std::uint64_t>(k);
    gen.generic = shape_rng.coin();
    gen.value_min = config.value_min;
    gen.value_max = config.value_max;
    gen.action_counts.clear();
    for (int i = 0; i < config.players; ++i)
      gen.action_counts.push_back(
          static_cast<int>(shape_rng.below(config.max_actions)) + 1);
    if (gen.generic && config.value_max - config.value_min + 1 <
                           *std::max_element(gen.action_counts.begin(),
                                             gen.action_counts.end()))
      gen.generic = false;
    Game game = random_game(gen);
    Rng battery_rng(gen.seed ^ 0xABCDEF);
    auto failures =
        property_battery(game, &battery_rng, config.transforms_per_game,
                         config.structures_per_game);
    ++result.games_run;
    if (failures.empty()) continue;
    // Shrink: drop actions one at a time while the failure persists.
    Game smallest = game;
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (int i = 0; i < smallest.num_players() && !shrunk; ++i) {
        if (smallest.num_actions(i) <= 1) continue;
        for (int a = 0; a < smallest.num_actions(i) && !shrunk; ++a) {
          Game candidate = remove_action(smallest, i, a);
          Rng shrink_rng(gen.seed ^ 0xFEDCBA);
          if (!property_battery(candidate, &shrink_rng,
                                config.transforms_per_game,
                                config.structures_per_game)
                   .empty()) {
            smallest = std::move(candidate);
            shrunk = true;
          }
        }
      }
    }
    for (const auto& f : failures)
      result.failures.push_back("game " + std::to_string(k) + ": " + f);
    if (!config.reproducer_dir.empty()) {
      const std::string path =
          (std::filesystem::path(config.reproducer_dir) /
           ("reproducer_" + std::to_string(k) + ".json"))
              .string();
      write_file(path, game_to_json(smallest).dump(2) + "\n");
      result.reproducer_files.push_back(path);
    }
  }
  return result;
}

}  // namespace ordinal

#endif  // ORDINAL_SUITE_HPP_
