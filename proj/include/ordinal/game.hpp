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

#ifndef ORDINAL_GAME_HPP_
#define ORDINAL_GAME_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordinal/rational.hpp"

namespace ordinal {

// An action profile: one action index per player, in declared player order.
using Profile = std::vector<int>;

// A profile of the opponents of some player: one action index per other
// player, in declared player order with the owner skipped.
using OppProfile = std::vector<int>;

// Per player, a nonempty subset of that player's actions (sorted indices).
// Carries the product restrictions the iterated procedures work on.
using Family = std::vector<std::vector<int>>;

// A finite game in which only the players' payoff orderings carry meaning.
// The rational payoff tensor is one representative of the ordinal
// equivalence class. Immutable after validation; all operations on it are
// pure functions.
struct Game {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;  // per player, nonempty
  // Per player, a total payoff map over full profiles, stored row-major in
  // declared player order (player 0's action is the slowest index).
  std::vector<std::vector<Rational>> payoffs;

  int num_players() const { return static_cast<int>(players.size()); }
  int num_actions(int player) const {
    return static_cast<int>(actions[player].size());
  }

  std::size_t num_profiles() const {
    std::size_t n = 1;
    for (const auto& a : actions) n *= a.size();
    return n;
  }

  std::size_t profile_index(const Profile& p) const {
    std::size_t idx = 0;
    for (int i = 0; i < num_players(); ++i) idx = idx * actions[i].size() + p[i];
    return idx;
  }

  Profile profile_at(std::size_t idx) const {
    Profile p(num_players());
    for (int i = num_players() - 1; i >= 0; --i) {
      p[i] = static_cast<int>(idx % actions[i].size());
      idx /= actions[i].size();
    }
    return p;
  }

  std::size_t num_opp_profiles(int player) const {
    std::size_t n = 1;
    for (int j = 0; j < num_players(); ++j)
      if (j != player) n *= actions[j].size();
    return n;
  }

  Profile combine(int player, int action, const OppProfile& opp) const {
    Profile p(num_players());
    int k = 0;
    for (int j = 0; j < num_players(); ++j)
      p[j] = (j == player) ? action : opp[k++];
    return p;
  }

  OppProfile opponents_of(int player, const Profile& p) const {
    OppProfile opp;
    opp.reserve(num_players() - 1);
    for (int j = 0; j < num_players(); ++j)
      if (j != player) opp.push_back(p[j]);
    return opp;
  }

  const Rational& payoff(int player, const Profile& p) const {
    return payoffs[player][profile_index(p)];
  }

  // u_i(a_i, a_{-i})
  const Rational& payoff_vs(int player, int action, const OppProfile& opp) const {
    return payoffs[player][profile_index(combine(player, action, opp))];
  }

  int action_id(int player, const std::string& name) const {
    const auto& list = actions[player];
    auto it = std::find(list.begin(), list.end(), name);
    if (it == list.end())
      throw std::out_of_range("unknown action '" + name + "' for player " +
                              players[player]);
    return static_cast<int>(it - list.begin());
  }

  int player_id(const std::string& name) const {
    auto it = std::find(players.begin(), players.end(), name);
    if (it == players.end()) throw std::out_of_range("unknown player " + name);
    return static_cast<int>(it - players.begin());
  }

  Family full_family() const {
    Family f(num_players());
    for (int i = 0; i < num_players(); ++i) {
      f[i].resize(actions[i].size());
      for (std::size_t k = 0; k < actions[i].size(); ++k)
        f[i][k] = static_cast<int>(k);
    }
    return f;
  }

  // Identifier-level validation (players and action lists only).
  std::vector<std::string> validate_identifiers() const {
    std::vector<std::string> errors;
    if (players.size() < 2) errors.push_back("a game needs at least 2 players");
    std::set<std::string> seen;
    for (const auto& p : players)
      if (!seen.insert(p).second)
        errors.push_back("duplicate player identifier '" + p + "'");
    if (actions.size() != players.size())
      errors.push_back("action lists do not match the player list");
    for (std::size_t i = 0; i < actions.size() && i < players.size(); ++i) {
      if (actions[i].empty())
        errors.push_back("player " + players[i] + " has no actions");
      std::set<std::string> names;
      for (const auto& a : actions[i])
        if (!names.insert(a).second)
          errors.push_back("duplicate action '" + a + "' for player " +
                           players[i]);
    }
    return errors;
  }

  // Full validation. Returns an empty list iff the game is usable.
  std::vector<std::string> validate() const {
    std::vector<std::string> errors = validate_identifiers();
    if (!errors.empty()) return errors;
    if (payoffs.size() != players.size()) {
      errors.push_back("payoff tensors do not match the player list");
      return errors;
    }
    for (std::size_t i = 0; i < players.size(); ++i)
      if (payoffs[i].size() != num_profiles())
        errors.push_back("payoff tensor of player " + players[i] +
                         " does not cover every profile");
    return errors;
  }
};

// All opponent profiles of `player` within the given restriction, in
// canonical row-major order (others in declared player order).
inline std::vector<OppProfile> opp_product(const Game& game, int player,
                                           const Family& restriction) {
  std::vector<int> others;
  for (int j = 0; j < game.num_players(); ++j)
    if (j != player) others.push_back(j);
  std::vector<OppProfile> out;
  OppProfile current(others.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == others.size()) {
      out.push_back(current);
      return;
    }
    for (int a : restriction[others[k]]) {
      current[k] = a;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

inline std::vector<OppProfile> opp_product(const Game& game, int player) {
  return opp_product(game, player, game.full_family());
}

// All full profiles of the restricted product, canonical row-major order.
inline std::vector<Profile> profile_product(const Game& game,
                                            const Family& restriction) {
  std::vector<Profile> out;
  Profile current(game.num_players());
  std::function<void(int)> rec = [&](int k) {
    if (k == game.num_players()) {
      out.push_back(current);
      return;
    }
    for (int a : restriction[k]) {
      current[k] = a;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

struct GenericityReport {
  std::vector<bool> per_player;
  bool overall = true;
};

// A game is generic for player i if distinct own actions never tie:
// u_i(a_i, a_-i) != u_i(a'_i, a_-i) for every a_-i and a_i != a'_i.
inline GenericityReport is_generic(const Game& game) {
  GenericityReport report;
  report.per_player.resize(game.num_players(), true);
  for (int i = 0; i < game.num_players(); ++i) {
    for (const OppProfile& opp : opp_product(game, i)) {
      for (int a = 0; a < game.num_actions(i) && report.per_player[i]; ++a)
        for (int b = a + 1; b < game.num_actions(i); ++b)
          if (game.payoff_vs(i, a, opp) == game.payoff_vs(i, b, opp)) {
            report.per_player[i] = false;
            break;
          }
      if (!report.per_player[i]) break;
    }
    report.overall = report.overall && report.per_player[i];
  }
  return report;
}

struct OrdinalComparison {
  bool same_shape = false;
  bool equivalent = false;
  std::string detail;  // names the first mismatch
};

// True iff the two games carry the same preference orderings: same players
// and actions and, per player, the same payoff comparison sign between
// every pair of profiles.
inline OrdinalComparison ordinal_equivalent(const Game& g1, const Game& g2) {
  OrdinalComparison cmp;
  if (g1.players != g2.players || g1.actions != g2.actions) {
    cmp.detail = "shape mismatch (players or action lists differ)";
    return cmp;
  }
  cmp.same_shape = true;
  const std::size_t n = g1.num_profiles();
  for (int i = 0; i < g1.num_players(); ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const auto s1 = g1.payoffs[i][p].compare(g1.payoffs[i][q]);
        const auto s2 = g2.payoffs[i][p].compare(g2.payoffs[i][q]);
        if ((s1 < 0) != (s2 < 0) || (s1 > 0) != (s2 > 0)) {
          cmp.detail = "order mismatch for player " + g1.players[i];
          return cmp;
        }
      }
  cmp.equivalent = true;
  return cmp;
}

// Visits every nonempty subset of the restricted opponent-profile product,
// ordered by cardinality and then lexicographically by the sorted index
// lists. The visitor returns false to stop early. Returns false iff the
// enumeration was stopped.
inline bool for_each_belief_subset(
    const std::vector<OppProfile>& product,
    const std::function<bool(const std::vector<OppProfile>&)>& visit) {
  const int k = static_cast<int>(product.size());
  std::vector<int> pick;
  std::vector<OppProfile> subset;
  std::function<bool(int, int, int)> rec = [&](int size, int next,
                                               int remaining) -> bool {
    if (remaining == 0) {
      subset.clear();
      for (int idx : pick) subset.push_back(product[idx]);
      return visit(subset);
    }
    for (int idx = next; idx + remaining <= k; ++idx) {
      pick.push_back(idx);
      if (!rec(size, idx + 1, remaining - 1)) return false;
      pick.pop_back();
    }
    return true;
  };
  for (int size = 1; size <= k; ++size)
    if (!rec(size, 0, size)) return false;
  return true;
}

// Materialized variant of the enumeration above (2^k - 1 sets).
inline std::vector<std::vector<OppProfile>> enumerate_belief_sets(
    const Game& game, int player, const Family& restriction) {
  std::vector<std::vector<OppProfile>> out;
  for_each_belief_subset(opp_product(game, player, restriction),
                         [&](const std::vector<OppProfile>& s) {
                           out.push_back(s);
                           return true;
                         });
  return out;
}

}  // namespace ordinal

#endif  // ORDINAL_GAME_HPP_
