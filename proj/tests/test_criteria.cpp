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

#include "ordinal/criteria.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "support/mixture_oracle.hpp"
#include "support/paper_games.hpp"

using namespace ordinal;
using namespace ordlab_tests;

namespace {

std::vector<OppProfile> full_opponents(const Game& g, int player) {
  return opp_product(g, player, g.full_family());
}

std::vector<std::string> names(const Game& g, int player,
                               const std::vector<int>& actions) {
  std::vector<std::string> out;
  for (int a : actions) out.push_back(g.actions[player][a]);
  return out;
}

}  // namespace

TEST_CASE("best-case replies on the 3x3 game") {
  Game g = leading_game();
  REQUIRE(names(g, 0, optimistic_best_replies(g, 0, {{0}})) ==
          std::vector<std::string>{"M"});  // vs {L}
  REQUIRE(names(g, 0, optimistic_best_replies(g, 0, full_opponents(g, 0))) ==
          std::vector<std::string>{"M"});
  REQUIRE(names(g, 0, optimistic_best_replies(g, 0, {{1}})) ==
          std::vector<std::string>{"T"});  // vs {C}
}

TEST_CASE("worst-case replies on the reference games") {
  Game g = leading_game();
  REQUIRE(names(g, 0, pessimistic_best_replies(g, 0, full_opponents(g, 0))) ==
          std::vector<std::string>{"T", "M", "D"});
  Game b = b_not_v_game();
  REQUIRE(names(b, 0, pessimistic_best_replies(b, 0, {{0}, {1}})) ==
          std::vector<std::string>{"D"});
  Game v = v_not_r_game();
  REQUIRE(names(v, 0, pessimistic_best_replies(v, 0, {{0}, {1}})) ==
          std::vector<std::string>{"M"});
}

TEST_CASE("singleton beliefs collapse every criterion to argmax") {
  for (const Game& g : {leading_game(), bos_game(), b_not_v_game(), v_not_r_game()}) {
    for (int i = 0; i < g.num_players(); ++i) {
      for (const auto& opp : full_opponents(g, i)) {
        std::vector<OppProfile> belief{opp};
        auto o = optimistic_best_replies(g, i, belief);
        auto p = pessimistic_best_replies(g, i, belief);
        auto a = admissible_set(g, i, belief);
        REQUIRE(o == p);
        REQUIRE(o == a);
      }
    }
  }
}

TEST_CASE("weak dominance scans dominators in canonical order") {
  Game g = leading_game();
  const int D = g.action_id(0, "D");
  SECTION("against {C} the first dominator is T") {
    auto dom = weakly_dominated(g, 0, D, {{1}});
    REQUIRE(dom);
    REQUIRE(g.actions[0][*dom] == "T");
  }
  SECTION("against {L}, T only ties, so M is the dominator") {
    auto dom = weakly_dominated(g, 0, D, {{0}});
    REQUIRE(dom);
    REQUIRE(g.actions[0][*dom] == "M");
  }
  SECTION("a unique argmax action is never weakly dominated") {
    const int M = g.action_id(0, "M");
    REQUIRE_FALSE(weakly_dominated(g, 0, M, {{0}}));  // M is best vs L
  }
}

TEST_CASE("admissible sets on the reference games") {
  Game g = leading_game();
  REQUIRE(names(g, 0, admissible_set(g, 0, full_opponents(g, 0))) ==
          std::vector<std::string>{"T", "M"});
  Game b = b_not_v_game();
  REQUIRE(names(b, 0, admissible_set(b, 0, {{0}, {1}})) ==
          std::vector<std::string>{"T", "M", "D"});
}

TEST_CASE("subset-quantified dominance") {
  Game g = leading_game();
  const int D = g.action_id(0, "D");
  SECTION("D is inadmissible against every subset of the full column set") {
    auto check = borgers_dominated(g, 0, D, full_opponents(g, 0));
    REQUIRE(check.dominated);
    REQUIRE(check.subset_dominators.size() == 7);
    DominanceWitness w;
    w.kind = DominanceWitness::Kind::kBorgers;
    w.player = 0;
    w.dominated = D;
    w.restriction = full_opponents(g, 0);
    w.subset_dominators = check.subset_dominators;
    REQUIRE(verify_witness(g, w));
  }
  SECTION("M in the 3x2 game is admissible against {L,R}") {
    Game b = b_not_v_game();
    auto check = borgers_dominated(b, 0, b.action_id(0, "M"), {{0}, {1}});
    REQUIRE_FALSE(check.dominated);
    REQUIRE(check.admissible_subset ==
            std::vector<OppProfile>{{0}, {1}});
  }
  SECTION("singleton restriction reduces to argmax membership") {
    for (int a = 0; a < 3; ++a) {
      auto check = borgers_dominated(g, 0, a, {{0}});
      auto best = optimistic_best_replies(g, 0, {{0}});
      const bool is_best =
          std::find(best.begin(), best.end(), a) != best.end();
      REQUIRE(check.dominated == !is_best);
    }
  }
}

TEST_CASE("strict pure dominance") {
  Game g = leading_game();
  SECTION("column R is strictly dominated by C") {
    auto dom = strictly_dominated_pure(g, 1, g.action_id(1, "R"),
                                       full_opponents(g, 1));
    REQUIRE(dom);
    REQUIRE(g.actions[1][*dom] == "C");
  }
  SECTION("row D is not strictly pure-dominated") {
    REQUIRE_FALSE(strictly_dominated_pure(g, 0, g.action_id(0, "D"),
                                          full_opponents(g, 0)));
  }
  SECTION("single-profile restriction") {
    // Vs {C} alone both T and D beat... T strictly beats D.
    auto dom = strictly_dominated_pure(g, 0, g.action_id(0, "D"), {{1}});
    REQUIRE(dom);
    REQUIRE(g.actions[0][*dom] == "T");
  }
}

TEST_CASE("strict mixed dominance via the exact LP") {
  SECTION("the 3x2 game with rows (3,0),(1,1),(0,3): M loses to (1/2,1/2)") {
    Game v = v_not_r_game();
    auto mix = strictly_dominated_mixed(v, 0, v.action_id(0, "M"), {{0}, {1}},
                                        {v.action_id(0, "T"), v.action_id(0, "D")});
    REQUIRE(mix);
    REQUIRE(mix->weights.size() == 2);
    REQUIRE(mix->weights[0].second == Rational(1, 2));
    REQUIRE(mix->weights[1].second == Rational(1, 2));
  }
  SECTION("the 3x2 game with rows (6,1),(5,2),(4,3): M is undominated") {
    Game b = b_not_v_game();
    REQUIRE_FALSE(strictly_dominated_mixed(
        b, 0, b.action_id(0, "M"), {{0}, {1}},
        {b.action_id(0, "T"), b.action_id(0, "D")}));
  }
  SECTION("3x3 game: D loses to a T-heavy mixture of T and M") {
    Game g = leading_game();
    auto mix = strictly_dominated_mixed(g, 0, g.action_id(0, "D"),
                                        full_opponents(g, 0),
                                        {g.action_id(0, "T"), g.action_id(0, "M")});
    REQUIRE(mix);
    REQUIRE(mix->weights[0].first == g.action_id(0, "T"));
    REQUIRE(mix->weights[0].second > Rational(1, 2));
    REQUIRE(mix->weights[0].second < Rational(1));
    DominanceWitness w;
    w.kind = DominanceWitness::Kind::kStrictMixed;
    w.player = 0;
    w.dominated = g.action_id(0, "D");
    w.mixed_dominator = mix;
    w.restriction = full_opponents(g, 0);
    REQUIRE(verify_witness(g, w));
  }
  SECTION("singleton support degenerates to pure dominance") {
    Game g = leading_game();
    for (int a = 0; a < 3; ++a) {
      for (int s = 0; s < 3; ++s) {
        if (s == a) continue;
        auto pure = strictly_dominated_pure(g, 1, a, full_opponents(g, 1), {s});
        auto mix = strictly_dominated_mixed(g, 1, a, full_opponents(g, 1), {s});
        REQUIRE(pure.has_value() == mix.has_value());
      }
    }
  }
}

TEST_CASE("a three-way mixture is found when no pair suffices") {
  Game g = make_two_player_game({"n", "e", "w", "m"}, {"L", "C", "R"},
                                {6, 0, 0, 0, 6, 0, 0, 0, 6, 1, 1, 1},
                                std::vector<long>(12, 0));
  const int m = g.action_id(0, "m");
  const auto restriction = opp_product(g, 0, g.full_family());
  SECTION("no two-action support works") {
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y)
        REQUIRE_FALSE(strictly_dominated_mixed(g, 0, m, restriction, {x, y}));
  }
  SECTION("the equal three-way split dominates") {
    auto mix = strictly_dominated_mixed(g, 0, m, restriction, {0, 1, 2});
    REQUIRE(mix);
    REQUIRE(mix->weights.size() == 3);
    for (const auto& [a, w] : mix->weights) REQUIRE(w == Rational(1, 3));
  }
}

TEST_CASE("three-player beliefs range over correlated profile sets") {
  // Player p's payoff depends on the (q, r) pair: high on matching pairs.
  Game g;
  g.players = {"p", "q", "r"};
  g.actions = {{"a"}, {"x", "y"}, {"u", "v"}};
  g.payoffs.resize(3);
  // Profiles in row-major order: (a,x,u),(a,x,v),(a,y,u),(a,y,v).
  g.payoffs[0] = {Rational(5), Rational(0), Rational(0), Rational(5)};
  g.payoffs[1] = std::vector<Rational>(4, Rational(0));
  g.payoffs[2] = std::vector<Rational>(4, Rational(0));
  REQUIRE(g.validate().empty());
  // The correlated belief {(x,u),(y,v)} gives worst case 5; the full
  // product gives worst case 0.
  const std::vector<OppProfile> correlated = {{0, 0}, {1, 1}};
  const std::vector<OppProfile> full = opp_product(g, 0, g.full_family());
  Rational worst_corr(5), worst_full(0);
  for (const auto& opp : correlated)
    worst_corr = std::min(worst_corr, g.payoff_vs(0, 0, opp));
  for (const auto& opp : full)
    worst_full = std::min(worst_full, g.payoff_vs(0, 0, opp));
  REQUIRE(worst_corr == Rational(5));
  REQUIRE(worst_full == Rational(0));
  // And the enumeration covers exactly the 2^4 - 1 correlated subsets.
  REQUIRE(enumerate_belief_sets(g, 0, g.full_family()).size() == 15);
}

TEST_CASE("LP verdicts agree with the mixture-grid oracle on the fixtures") {
  for (const Game& g : {leading_game(), bos_game(), b_not_v_game(), v_not_r_game()}) {
    for (int i = 0; i < g.num_players(); ++i) {
      const auto restriction = full_opponents(g, i);
      for (int a = 0; a < g.num_actions(i); ++a) {
        std::vector<int> support;
        for (int s = 0; s < g.num_actions(i); ++s)
          if (s != a) support.push_back(s);
        const bool lp_dominated =
            strictly_dominated_mixed(g, i, a, restriction, support).has_value();
        const bool grid_dominated =
            grid_strict_dominator(g, i, a, restriction, support, 24).has_value();
        REQUIRE(lp_dominated == grid_dominated);
      }
    }
  }
}

TEST_CASE("dominance chain: strict pure implies weak implies inadmissible") {
  for (const Game& g : {leading_game(), bos_game(), b_not_v_game(), v_not_r_game()}) {
    for (int i = 0; i < g.num_players(); ++i) {
      const auto restriction = full_opponents(g, i);
      const auto adm = admissible_set(g, i, restriction);
      for (int a = 0; a < g.num_actions(i); ++a) {
        const bool in_adm = std::find(adm.begin(), adm.end(), a) != adm.end();
        if (strictly_dominated_pure(g, i, a, restriction))
          REQUIRE(weakly_dominated(g, i, a, restriction));
        if (weakly_dominated(g, i, a, restriction)) REQUIRE_FALSE(in_adm);
        if (borgers_dominated(g, i, a, restriction).dominated)
          REQUIRE_FALSE(in_adm);
      }
    }
  }
}

TEST_CASE("criteria read only payoff comparisons") {
  Game g = leading_game();
  Game h = g;
  for (auto& u : h.payoffs[0]) u = u * 7 + 2;
  for (auto& u : h.payoffs[1]) u = u * u + 3 * u;  // increasing on >= 0
  REQUIRE(ordinal_equivalent(g, h).equivalent);
  for (int i = 0; i < 2; ++i) {
    const auto restriction = full_opponents(g, i);
    for (int a = 0; a < g.num_actions(i); ++a) {
      REQUIRE(weakly_dominated(g, i, a, restriction) ==
              weakly_dominated(h, i, a, restriction));
      REQUIRE(strictly_dominated_pure(g, i, a, restriction) ==
              strictly_dominated_pure(h, i, a, restriction));
      REQUIRE(borgers_dominated(g, i, a, restriction).dominated ==
              borgers_dominated(h, i, a, restriction).dominated);
    }
    REQUIRE(optimistic_best_replies(g, i, restriction) ==
            optimistic_best_replies(h, i, restriction));
    REQUIRE(pessimistic_best_replies(g, i, restriction) ==
            pessimistic_best_replies(h, i, restriction));
    REQUIRE(admissible_set(g, i, restriction) == admissible_set(h, i, restriction));
  }
}
