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

#include "ordinal/knowledge.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "support/paper_games.hpp"
#include "support/paper_structures.hpp"

using namespace ordinal;
using namespace ordlab_tests;

namespace {

KnowledgeState state_of(const KnowledgeStructure& ks,
                        std::vector<std::string> actions,
                        std::vector<std::string> types) {
  KnowledgeState s;
  for (int i = 0; i < ks.game.num_players(); ++i) {
    s.actions.push_back(ks.game.action_id(i, actions[i]));
    int t = -1;
    for (std::size_t k = 0; k < ks.types[i].size(); ++k)
      if (ks.types[i][k] == types[i]) t = static_cast<int>(k);
    REQUIRE(t >= 0);
    s.types.push_back(t);
  }
  return s;
}

int index_of(const KnowledgeStructure& ks, const KnowledgeState& s) {
  auto it = std::lower_bound(ks.states.begin(), ks.states.end(), s);
  REQUIRE(it != ks.states.end());
  REQUIRE(*it == s);
  return static_cast<int>(it - ks.states.begin());
}

// Two states on Battle of the Sexes, each player fully informed through
// her type. Valid and non-product.
KnowledgeStructure two_state_structure() {
  KnowledgeStructure ks;
  ks.game = bos_game();
  ks.types = {{"ta", "ta2"}, {"tb", "tb2"}};
  ks.states = {state_of(ks, {"T", "L"}, {"ta", "tb"}),
               state_of(ks, {"D", "R"}, {"ta2", "tb2"})};
  std::sort(ks.states.begin(), ks.states.end());
  const int s0 = index_of(ks, state_of(ks, {"T", "L"}, {"ta", "tb"}));
  const int s1 = index_of(ks, state_of(ks, {"D", "R"}, {"ta2", "tb2"}));
  ks.cells = {{{s0}, {s1}}, {{s0}, {s1}}};
  ks.rebuild_cell_map();
  return ks;
}

}  // namespace

TEST_CASE("knowledge structure validation") {
  SECTION("the singleton and two-state structures validate") {
    REQUIRE(singleton_knowledge_structure().validate().empty());
    REQUIRE(two_state_structure().validate().empty());
  }
  SECTION("full-product structures with forced partitions validate") {
    REQUIRE(product_knowledge_structure(bos_game(), {1, 1}).validate().empty());
    REQUIRE(product_knowledge_structure(bos_game(), {2, 2}).validate().empty());
  }
  SECTION("a cell map whose state is outside its own cell is rejected") {
    // Three states, one shared type per player; the claimed cells form a
    // cycle, so reflexivity fails.
    KnowledgeStructure ks;
    ks.game = bos_game();
    ks.types = {{"ta"}, {"tb"}};
    ks.states = {state_of(ks, {"D", "R"}, {"ta", "tb"}),
                 state_of(ks, {"D", "L"}, {"ta", "tb"}),
                 state_of(ks, {"T", "L"}, {"ta", "tb"})};
    std::sort(ks.states.begin(), ks.states.end());
    ks.cells.resize(2);
    const int dl = index_of(ks, state_of(ks, {"D", "L"}, {"ta", "tb"}));
    const int dr = index_of(ks, state_of(ks, {"D", "R"}, {"ta", "tb"}));
    const int tl = index_of(ks, state_of(ks, {"T", "L"}, {"ta", "tb"}));
    std::vector<StateSet> claimed(3);
    claimed[dl] = {dr};
    claimed[dr] = {dl};
    claimed[tl] = {tl};
    for (auto& c : claimed) std::sort(c.begin(), c.end());
    auto errors = adopt_cell_map(&ks, 0, claimed);
    REQUIRE_FALSE(errors.empty());
    REQUIRE(errors[0].find("not a member of its own cell") != std::string::npos);
  }
  SECTION("introspection violations are caught") {
    KnowledgeStructure ks = two_state_structure();
    ks.cells[0] = {{0, 1}};  // one cell mixing two own pairs
    ks.rebuild_cell_map();
    auto errors = ks.validate();
    REQUIRE_FALSE(errors.empty());
    REQUIRE(errors[0].find("introspection") != std::string::npos);
  }
  SECTION("independence violations are caught") {
    // Same own type at both states but different opponent projections.
    KnowledgeStructure ks = two_state_structure();
    ks.types[0] = {"ta", "ta"};  // also a duplicate-type error, so rebuild:
    ks.types[0] = {"ta"};
    for (auto& s : ks.states) s.types[0] = 0;
    ks.rebuild_cell_map();
    auto errors = ks.validate();
    REQUIRE_FALSE(errors.empty());
    bool found = false;
    for (const auto& e : errors)
      if (e.find("independence") != std::string::npos) found = true;
    REQUIRE(found);
  }
}

TEST_CASE("knowledge operator obeys the Truth axiom") {
  KnowledgeStructure ks = two_state_structure();
  StateSet all = {0, 1};
  SECTION("the full event is known everywhere") {
    REQUIRE(knowledge_operator(ks, 0, all) == all);
    REQUIRE(knowledge_all(ks, all) == all);
  }
  SECTION("knowledge of a subset is inside the subset") {
    for (const StateSet& e :
         {StateSet{}, StateSet{0}, StateSet{1}, StateSet{0, 1}}) {
      for (int i = 0; i < 2; ++i) {
        StateSet k = knowledge_operator(ks, i, e);
        REQUIRE(std::includes(e.begin(), e.end(), k.begin(), k.end()));
      }
    }
  }
}

TEST_CASE("single-state structure: optimism is common knowledge") {
  KnowledgeStructure ks = singleton_knowledge_structure();
  StateSet opt = optimism_states(ks);
  REQUIRE(opt == StateSet{0});
  KnowledgeChain chain = common_knowledge_chain(ks, opt);
  REQUIRE(chain.fixed_index == 0);
  for (const auto& level : chain.levels) REQUIRE(level == StateSet{0});
  // Its action projection sits inside the procedure's fixed point.
  auto proj = project_state_actions(ks, chain.fixed_point());
  Trace yr = wishful_thinking(ks.game);
  for (const Profile& p : proj)
    REQUIRE(std::binary_search(yr.fixed_profiles().begin(),
                               yr.fixed_profiles().end(), p));
}

TEST_CASE("wt theorem holds on the hand-built structures") {
  for (const KnowledgeStructure& ks :
       {singleton_knowledge_structure(), two_state_structure(),
        product_knowledge_structure(bos_game(), {1, 1}),
        product_knowledge_structure(bos_game(), {2, 2}),
        product_knowledge_structure(leading_game(), {1, 2})}) {
    auto report = check_wt_theorem(ks);
    CAPTURE(report.violations);
    REQUIRE(report.all_hold());
  }
}

TEST_CASE("the profile (D,L) is never optimistically knowable in BoS") {
  Game g = bos_game();
  const Profile dl = {g.action_id(0, "D"), g.action_id(1, "L")};
  for (const KnowledgeStructure& ks :
       {singleton_knowledge_structure(), two_state_structure(),
        product_knowledge_structure(bos_game(), {1, 1}),
        product_knowledge_structure(bos_game(), {2, 2})}) {
    auto proj = project_state_actions(ks, optimism_states(ks));
    REQUIRE_FALSE(std::binary_search(proj.begin(), proj.end(), dl));
  }
}

TEST_CASE("possibility structures derived from partition models") {
  SECTION("singleton structure projects to point beliefs") {
    KnowledgeStructure ks = singleton_knowledge_structure();
    PossibilityStructure ps = possibility_from_knowledge(ks);
    REQUIRE(ps.validate().empty());
    REQUIRE(ps.pi[0][0].size() == 1);
    REQUIRE(ps.pi[0][0][0].actions == OppProfile{ks.game.action_id(1, "L")});
    REQUIRE(ps.pi[1][0][0].actions == OppProfile{ks.game.action_id(0, "T")});
  }
  SECTION("full-information product structure projects per state") {
    KnowledgeStructure ks = product_knowledge_structure(bos_game(), {1, 1});
    PossibilityStructure ps = possibility_from_knowledge(ks);
    REQUIRE(ps.validate().empty());
    // With one type per player the image is the full opponent column.
    REQUIRE(ps.pi[0][0].size() == 2);
  }
  SECTION("derived structures re-validate on every fixture") {
    for (const KnowledgeStructure& ks :
         {two_state_structure(), product_knowledge_structure(bos_game(), {2, 2}),
          product_knowledge_structure(leading_game(), {2, 1})}) {
      REQUIRE(possibility_from_knowledge(ks).validate().empty());
    }
  }
}

TEST_CASE("on product state spaces only the full interactive event is known") {
  SECTION("2x2 actions, single types") {
    KnowledgeStructure ks = product_knowledge_structure(bos_game(), {1, 1});
    auto report = product_triviality_check(ks);
    REQUIRE(report.precondition_ok);
    REQUIRE(report.exhaustive);
    REQUIRE(report.passed());
    REQUIRE(report.events_checked == 2 * 3);  // (2^2 - 1) per player... 3 each
  }
  SECTION("2x2 actions, two types each: 15 events per player") {
    KnowledgeStructure ks = product_knowledge_structure(bos_game(), {2, 2});
    auto report = product_triviality_check(ks);
    REQUIRE(report.passed());
    REQUIRE(report.exhaustive);
    REQUIRE(report.events_checked == 2 * 15);
  }
  SECTION("an event missing one element is known nowhere") {
    KnowledgeStructure ks = product_knowledge_structure(bos_game(), {2, 2});
    // Drop one opponent element by hand: take all states except those whose
    // opponent part matches the first opponent tuple.
    StateSet event;
    for (int s = 0; s < ks.num_states(); ++s)
      if (!(ks.states[s].actions[1] == 0 && ks.states[s].types[1] == 0))
        event.push_back(s);
    REQUIRE(knowledge_operator(ks, 0, event).empty());
  }
  SECTION("precondition failure on a non-product space") {
    auto report = product_triviality_check(two_state_structure());
    REQUIRE_FALSE(report.precondition_ok);
  }
  SECTION("three players, exhaustive over the opponent event space") {
    Game g;
    g.players = {"p", "q", "r"};
    g.actions = {{"a", "b"}, {"x", "y"}, {"u", "v"}};
    g.payoffs.assign(3, std::vector<Rational>(8, Rational(0)));
    REQUIRE(g.validate().empty());
    KnowledgeStructure ks = product_knowledge_structure(g, {1, 1, 1});
    REQUIRE(ks.validate().empty());
    auto report = product_triviality_check(ks);
    REQUIRE(report.precondition_ok);
    REQUIRE(report.exhaustive);
    REQUIRE(report.passed());
    // Each player faces 2x2 opponent tuples: 2^4 - 1 events per player.
    REQUIRE(report.events_checked == 3 * 15);
  }
}

TEST_CASE("knowledge is idempotent per player") {
  for (const KnowledgeStructure& ks :
       {two_state_structure(), product_knowledge_structure(bos_game(), {2, 2}),
        product_knowledge_structure(leading_game(), {1, 2})}) {
    StateSet opt = optimism_states(ks);
    for (int i = 0; i < ks.game.num_players(); ++i) {
      StateSet once = knowledge_operator(ks, i, opt);
      REQUIRE(knowledge_operator(ks, i, once) == once);
    }
  }
}

TEST_CASE("wt chain levels shrink and stabilize") {
  KnowledgeStructure ks = product_knowledge_structure(leading_game(), {2, 2});
  StateSet opt = optimism_states(ks);
  KnowledgeChain chain = common_knowledge_chain(ks, opt);
  for (std::size_t m = 1; m < chain.levels.size(); ++m)
    REQUIRE(std::includes(chain.levels[m - 1].begin(), chain.levels[m - 1].end(),
                          chain.levels[m].begin(), chain.levels[m].end()));
  REQUIRE(chain.fixed_index >= 0);
}
