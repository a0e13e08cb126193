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

#include "ordinal/solvers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "support/paper_games.hpp"

using namespace ordinal;
using namespace ordlab_tests;

namespace {

Family family_of(const Game& g, std::vector<std::vector<std::string>> named) {
  Family f(g.num_players());
  for (int i = 0; i < g.num_players(); ++i)
    for (const auto& name : named[i]) f[i].push_back(g.action_id(i, name));
  return f;
}

std::vector<Profile> profiles_of(const Game& g,
                                 std::vector<std::vector<std::string>> named) {
  std::vector<Profile> out;
  for (const auto& p : named) {
    Profile prof;
    for (int i = 0; i < g.num_players(); ++i)
      prof.push_back(g.action_id(i, p[i]));
    out.push_back(prof);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_clean(const Game& g, const Trace& t) {
  auto problems = verify_trace(g, t);
  CAPTURE(problems);
  REQUIRE(problems.empty());
}

}  // namespace

TEST_CASE("point procedure on the 3x3 game walks down to {M}x{L}") {
  Game g = leading_game();
  Trace t = point_rationalizability(g);
  REQUIRE(t.rounds[1] == family_of(g, {{"T", "M"}, {"L", "C"}}));
  REQUIRE(t.rounds[2] == family_of(g, {{"T", "M"}, {"L"}}));
  REQUIRE(t.rounds[3] == family_of(g, {{"M"}, {"L"}}));
  REQUIRE(t.fixed_point_round == 3);
  REQUIRE(t.fixed_family() == family_of(g, {{"M"}, {"L"}}));
  require_clean(g, t);
}

TEST_CASE("point procedure keeps everything in Battle of the Sexes") {
  Game g = bos_game();
  Trace t = point_rationalizability(g);
  REQUIRE(t.fixed_point_round == 0);
  REQUIRE(t.fixed_family() == g.full_family());
  require_clean(g, t);
}

TEST_CASE("point procedure with strictly dominant actions fixes in one round") {
  Game g = make_two_player_game({"c", "d"}, {"c", "d"}, {3, 0, 5, 1},
                                {3, 5, 0, 1});
  Trace t = point_rationalizability(g);
  REQUIRE(t.rounds[1] == family_of(g, {{"d"}, {"d"}}));
  REQUIRE(t.fixed_point_round == 1);
  require_clean(g, t);
}

TEST_CASE("maxmin procedure on the 3x3 game stops at A_a x {L,C}") {
  Game g = leading_game();
  Trace t = maxmin_rationalizability(g);
  REQUIRE(t.rounds[1] == family_of(g, {{"T", "M", "D"}, {"L", "C"}}));
  REQUIRE(t.fixed_point_round == 1);
  require_clean(g, t);
}

TEST_CASE("maxmin round one on the two 3x2 games") {
  Game b = b_not_v_game();
  Trace tb = maxmin_rationalizability(b);
  REQUIRE(tb.rounds[1][0] ==
          std::vector<int>{b.action_id(0, "T"), b.action_id(0, "D")});
  require_clean(b, tb);

  Game v = v_not_r_game();
  Trace tv = maxmin_rationalizability(v);
  REQUIRE(tv.rounds[1][0] == std::vector<int>{0, 1, 2});
  require_clean(v, tv);
}

TEST_CASE("subset-admissibility procedure on the 3x3 game") {
  Game g = leading_game();
  Trace t = borgers_rationalizability(g);
  REQUIRE(t.rounds[1] == family_of(g, {{"T", "M"}, {"L", "C"}}));
  REQUIRE(t.fixed_family() == family_of(g, {{"M"}, {"L"}}));
  require_clean(g, t);
  // The eliminated D carries a subset-quantified witness.
  bool found = false;
  for (const auto& e : t.eliminations)
    if (e.round == 1 && e.player == 0 && e.action == g.action_id(0, "D")) {
      REQUIRE(e.witness);
      REQUIRE(e.witness->kind == DominanceWitness::Kind::kBorgers);
      REQUIRE(verify_witness(g, *e.witness));
      found = true;
    }
  REQUIRE(found);
}

TEST_CASE("subset-admissibility keeps everything in the 3x2 game") {
  Game b = b_not_v_game();
  Trace t = borgers_rationalizability(b);
  REQUIRE(t.rounds[1] == b.full_family());
  REQUIRE(t.fixed_point_round == 0);
  require_clean(b, t);
}

TEST_CASE("one-action games fix trivially at round zero") {
  Game g = one_by_one_game();
  for (SolutionConcept c :
       {SolutionConcept::kPoint, SolutionConcept::kMaxmin,
        SolutionConcept::kBorgers, SolutionConcept::kMixed,
        SolutionConcept::kStrictPure}) {
    Trace t = solve(g, c);
    REQUIRE(t.fixed_point_round == 0);
    REQUIRE(t.fixed_family() == g.full_family());
    require_clean(g, t);
  }
  Trace y = wishful_thinking(g);
  REQUIRE(y.fixed_point_round == 0);
  REQUIRE(y.fixed_profiles().size() == 1);
  require_clean(g, y);
}

TEST_CASE("profile-level procedure deletes (D,L) from Battle of the Sexes") {
  Game g = bos_game();
  Trace t = wishful_thinking(g);
  REQUIRE(t.profile_rounds[1] ==
          profiles_of(g, {{"T", "L"}, {"T", "R"}, {"D", "R"}}));
  REQUIRE(t.fixed_point_round == 1);
  REQUIRE(t.fixed_profiles() ==
          profiles_of(g, {{"T", "L"}, {"T", "R"}, {"D", "R"}}));
  bool found = false;
  for (const auto& e : t.eliminations)
    if (e.round == 1 && e.profile == profiles_of(g, {{"D", "L"}})[0]) {
      found = true;
      REQUIRE(e.failing_player == 0);
    }
  REQUIRE(found);
  require_clean(g, t);
}

TEST_CASE("mixed-dominance procedure round one on the fixtures") {
  Game v = v_not_r_game();
  Trace tv = mixed_rationalizability(v);
  REQUIRE(tv.rounds[1][0] ==
          std::vector<int>{v.action_id(0, "T"), v.action_id(0, "D")});
  require_clean(v, tv);

  Game b = b_not_v_game();
  Trace tb = mixed_rationalizability(b);
  REQUIRE(tb.rounds[1] == b.full_family());
  require_clean(b, tb);

  Game g = leading_game();
  Trace tg = mixed_rationalizability(g);
  REQUIRE(tg.rounds[1] == family_of(g, {{"T", "M"}, {"L", "C"}}));
  REQUIRE(tg.rounds[2] == family_of(g, {{"T", "M"}, {"L"}}));
  REQUIRE(tg.fixed_family() == family_of(g, {{"M"}, {"L"}}));
  require_clean(g, tg);
}

TEST_CASE("pure strict dominance procedure") {
  Game g = leading_game();
  Trace t = iesd_pure(g);
  REQUIRE(t.rounds[1] == family_of(g, {{"T", "M", "D"}, {"L", "C"}}));
  REQUIRE(t.fixed_point_round == 1);
  require_clean(g, t);

  Game b = bos_game();
  Trace tb = iesd_pure(b);
  REQUIRE(tb.fixed_point_round == 0);
  require_clean(b, tb);

  Game d = make_two_player_game({"c", "d"}, {"c", "d"}, {3, 0, 5, 1},
                                {3, 5, 0, 1});
  Trace td = iesd_pure(d);
  REQUIRE(td.rounds[1] == family_of(d, {{"d"}, {"d"}}));
  REQUIRE(td.fixed_point_round == 1);
  require_clean(d, td);
}

TEST_CASE("fixed points arrive within the theoretical bound") {
  for (const Game& g :
       {leading_game(), bos_game(), b_not_v_game(), v_not_r_game()}) {
    int bound = 1;
    for (int i = 0; i < g.num_players(); ++i) bound += g.num_actions(i) - 1;
    for (SolutionConcept c :
         {SolutionConcept::kPoint, SolutionConcept::kMaxmin,
          SolutionConcept::kBorgers, SolutionConcept::kMixed,
          SolutionConcept::kStrictPure})
      REQUIRE(solve(g, c).fixed_point_round <= bound);
    REQUIRE(wishful_thinking(g).fixed_point_round <=
            static_cast<int>(g.num_profiles()));
  }
}

TEST_CASE("traces are identical on ordinally equivalent games") {
  Game g = leading_game();
  Game h = g;
  for (auto& u : h.payoffs[0]) u = u * 3 + 1;
  for (auto& u : h.payoffs[1]) u = u * u;  // increasing on >= 0
  REQUIRE(ordinal_equivalent(g, h).equivalent);
  for (SolutionConcept c :
       {SolutionConcept::kPoint, SolutionConcept::kMaxmin,
        SolutionConcept::kBorgers, SolutionConcept::kStrictPure}) {
    REQUIRE(solve(g, c).rounds == solve(h, c).rounds);
  }
  REQUIRE(wishful_thinking(g).profile_rounds ==
          wishful_thinking(h).profile_rounds);
}

TEST_CASE("mixed-dominance rounds survive affine but not monotone maps") {
  Game v = v_not_r_game();
  SECTION("positive affine transforms keep the rounds") {
    Game h = v;
    for (auto& u : h.payoffs[0]) u = Rational(7, 2) * u + Rational(5);
    REQUIRE(mixed_rationalizability(h).rounds ==
            mixed_rationalizability(v).rounds);
  }
  SECTION("the squashing map 0,1,3 -> 0,1,2 changes round one") {
    Game h = v;
    for (auto& u : h.payoffs[0])
      if (u == 3) u = 2;
    REQUIRE(ordinal_equivalent(v, h).equivalent);
    REQUIRE(mixed_rationalizability(v).rounds[1][0].size() == 2);
    REQUIRE(mixed_rationalizability(h).rounds[1][0].size() == 3);
  }
}

TEST_CASE("relation report on the three contrast games") {
  SECTION("3x3 game: maxmin is not inside the admissibility sets") {
    Game g = leading_game();
    RelationReport r = relations(g);
    REQUIRE(r.violations.empty());
    // wr (index 1) not included in br (index 2) at round 1, witness D.
    REQUIRE_FALSE(r.inclusion[1][1][2]);
    bool witnessed = false;
    for (const auto& w : r.noninclusion_witnesses)
      if (w.round == 1 && w.from == 1 && w.to == 2 && w.player == 0 &&
          w.action == g.action_id(0, "D"))
        witnessed = true;
    REQUIRE(witnessed);
  }
  SECTION("3x2 game: admissibility keeps M, maxmin does not") {
    Game b = b_not_v_game();
    RelationReport r = relations(b);
    REQUIRE(r.violations.empty());
    REQUIRE_FALSE(r.inclusion[1][2][1]);  // br not within wr
    bool witnessed = false;
    for (const auto& w : r.noninclusion_witnesses)
      if (w.round == 1 && w.from == 2 && w.to == 1 &&
          w.action == b.action_id(0, "M"))
        witnessed = true;
    REQUIRE(witnessed);
  }
  SECTION("generic 3x2 game: maxmin keeps M, mixed dominance does not") {
    Game v = v_not_r_game();
    RelationReport r = relations(v);
    // Not generic overall (column player all zero), so no generic claim.
    REQUIRE(r.violations.empty());
    REQUIRE_FALSE(r.inclusion[1][1][3]);  // wr not within tr
    bool witnessed = false;
    for (const auto& w : r.noninclusion_witnesses)
      if (w.round == 1 && w.from == 1 && w.to == 3 &&
          w.action == v.action_id(0, "M"))
        witnessed = true;
    REQUIRE(witnessed);
  }
}

TEST_CASE("claimed inclusions hold on every fixture at every round") {
  for (const Game& g :
       {leading_game(), bos_game(), b_not_v_game(), v_not_r_game(),
        one_by_one_game()}) {
    RelationReport r = relations(g);
    CAPTURE(r.violations);
    REQUIRE(r.violations.empty());
    for (int m = 0; m < r.horizon; ++m) {
      REQUIRE(r.inclusion[m][0][1]);  // pr within wr
      REQUIRE(r.inclusion[m][0][2]);  // pr within br
      REQUIRE(r.inclusion[m][3][2]);  // tr within br
      REQUIRE(r.wishful_in_point[m]);
    }
  }
}
