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

#ifndef ORDINAL_GENERATOR_HPP_
#define ORDINAL_GENERATOR_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ordinal/epistemic.hpp"
#include "ordinal/game.hpp"
#include "ordinal/knowledge.hpp"

namespace ordinal {

// Deterministic generator used by the CLI and the regression suites. The
// mixing function is fixed here (not delegated to the standard library's
// distributions) so identical seeds give identical bytes everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return draw % n;
  }

  long between(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return below(2) == 1; }

 private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::vector<int> action_counts = {3, 3};  // one entry per player
  bool generic = false;
  long value_min = 0;
  long value_max = 9;

  std::vector<std::string> validate() const {
    std::vector<std::string> errors;
    if (action_counts.size() < 2)
      errors.push_back("need at least 2 players");
    for (int c : action_counts)
      if (c < 1) errors.push_back("action counts must be positive");
    if (value_max < value_min) errors.push_back("empty payoff value range");
    if (generic) {
      const long span = value_max - value_min + 1;
      for (int c : action_counts)
        if (span < c)
          errors.push_back("generic games need a value range at least as "
                           "large as every action count");
    }
    return errors;
  }
};

// Deterministic for a seed. Under the generic flag, each opponent-profile
// column is rejection-sampled until the player's payoffs in it are
// pairwise distinct.
inline Game random_game(const GeneratorConfig& config) {
  {
    const auto errors = config.validate();
    if (!errors.empty()) throw std::invalid_argument(errors.front());
  }
  Rng rng(config.seed);
  Game g;
  const int n = static_cast<int>(config.action_counts.size());
  static const char* kActionNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  for (int i = 0; i < n; ++i) {
    g.players.push_back("p" + std::to_string(i + 1));
    std::vector<std::string> acts;
    for (int a = 0; a < config.action_counts[i]; ++a)
      acts.push_back(a < 8 ? kActionNames[a] : "x" + std::to_string(a));
    g.actions.push_back(acts);
  }
  g.payoffs.assign(n, std::vector<Rational>(g.num_profiles(), Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (const OppProfile& opp : opp_product(g, i)) {
      std::vector<long> column(config.action_counts[i]);
      for (;;) {
        for (long& v : column) v = rng.between(config.value_min, config.value_max);
        if (!config.generic) break;
        std::set<long> distinct(column.begin(), column.end());
        if (distinct.size() == column.size()) break;
      }
      for (int a = 0; a < config.action_counts[i]; ++a)
        g.payoffs[i][g.profile_index(g.combine(i, a, opp))] = column[a];
    }
  }
  return g;
}

// A strictly increasing remap of each player's attained payoff values onto
// integers with random gaps. The result is ordinally equivalent by
// construction.
inline Game random_monotone_transform(const Game& game, Rng* rng) {
  Game out = game;
  for (int i = 0; i < game.num_players(); ++i) {
    std::set<Rational> values(game.payoffs[i].begin(), game.payoffs[i].end());
    std::map<Rational, Rational> remap;
    Rational level(rng->between(-5, 5));
    for (const Rational& v : values) {
      remap[v] = level;
      level += rng->between(1, 4);
    }
    for (auto& v : out.payoffs[i]) v = remap[v];
  }
  return out;
}

// Small random possibility structure: up to `max_types` types per player,
// every possibility image a nonempty random subset of the opponent states.
inline PossibilityStructure random_possibility_structure(const Game& game,
                                                         Rng* rng,
                                                         int max_types = 3) {
  PossibilityStructure ps;
  ps.game = game;
  const int n = game.num_players();
  ps.types.resize(n);
  ps.pi.resize(n);
  for (int i = 0; i < n; ++i) {
    const int count = static_cast<int>(rng->below(max_types)) + 1;
    for (int t = 0; t < count; ++t)
      ps.types[i].push_back("t" + std::to_string(t + 1));
  }
  for (int i = 0; i < n; ++i) {
    // All opponent (action, type) tuples, canonical order.
    std::vector<OppState> space;
    std::vector<int> others;
    for (int j = 0; j < n; ++j)
      if (j != i) others.push_back(j);
    OppState current;
    current.actions.assign(others.size(), 0);
    current.types.assign(others.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == others.size()) {
        space.push_back(current);
        return;
      }
      for (int a = 0; a < game.num_actions(others[k]); ++a)
        for (int t = 0; t < static_cast<int>(ps.types[others[k]].size()); ++t) {
          current.actions[k] = a;
          current.types[k] = t;
          rec(k + 1);
        }
    };
    rec(0);
    ps.pi[i].resize(ps.types[i].size());
    for (auto& image : ps.pi[i]) {
      for (const OppState& s : space)
        if (rng->coin()) image.push_back(s);
      if (image.empty()) image.push_back(space[rng->below(space.size())]);
    }
  }
  return ps;
}

// Random valid partition model. Construction: group each player's actions,
// one type per group; pick a set of group combinations; the states are all
// action profiles whose group combination was picked (with the matching
// types). Cells are the own-pair classes, which then satisfy Introspection
// and Independence by construction.
inline KnowledgeStructure random_knowledge_structure(const Game& game, Rng* rng,
                                                     int max_states = 6) {
  const int n = game.num_players();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<int>> group_of(n);  // per player, action -> group
    std::vector<int> group_count(n);
    for (int i = 0; i < n; ++i) {
      const int groups =
          1 + static_cast<int>(rng->below(std::min(game.num_actions(i), 2)));
      group_count[i] = groups;
      group_of[i].resize(game.num_actions(i));
      for (int a = 0; a < game.num_actions(i); ++a)
        group_of[i][a] = static_cast<int>(rng->below(groups));
      // Every group must own an action: renumber down to the used ones.
      std::set<int> used(group_of[i].begin(), group_of[i].end());
      if (static_cast<int>(used.size()) != groups) {
        group_count[i] = static_cast<int>(used.size());
        int next_id = 0;
        std::map<int, int> renumber;
        for (int g : used) renumber[g] = next_id++;
        for (int& g : group_of[i]) g = renumber[g];
      }
    }
    // Select group combinations.
    std::vector<std::vector<int>> combos;
    std::vector<int> combo(n, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        combos.push_back(combo);
        return;
      }
      for (int c = 0; c < group_count[i]; ++c) {
        combo[i] = c;
        rec(i + 1);
      }
    };
    rec(0);
    std::vector<std::vector<int>> selected;
    for (const auto& c : combos)
      if (rng->coin()) selected.push_back(c);
    if (selected.empty()) selected = combos;
    // Every group must appear somewhere.
    bool covered = true;
    for (int i = 0; i < n && covered; ++i)
      for (int c = 0; c < group_count[i] && covered; ++c) {
        bool seen = false;
        for (const auto& sel : selected) seen = seen || sel[i] == c;
        covered = seen;
      }
    if (!covered) continue;

    KnowledgeStructure ks;
    ks.game = game;
    ks.types.resize(n);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < group_count[i]; ++c)
        ks.types[i].push_back("t" + std::to_string(c + 1));
    for (const Profile& p : profile_product(game, game.full_family())) {
      std::vector<int> cg(n);
      for (int i = 0; i < n; ++i) cg[i] = group_of[i][p[i]];
      if (std::find(selected.begin(), selected.end(), cg) == selected.end())
        continue;
      KnowledgeState s;
      s.actions = p;
      s.types = cg;
      ks.states.push_back(std::move(s));
    }
    if (ks.states.empty() ||
        static_cast<int>(ks.states.size()) > max_states)
      continue;
    std::sort(ks.states.begin(), ks.states.end());
    ks.cells.resize(n);
    for (int i = 0; i < n; ++i) {
      std::map<std::pair<int, int>, StateSet> by_own;
      for (int s = 0; s < ks.num_states(); ++s)
        by_own[{ks.states[s].actions[i], ks.states[s].types[i]}].push_back(s);
      for (auto& [own, cell] : by_own) ks.cells[i].push_back(cell);
    }
    ks.rebuild_cell_map();
    if (ks.validate().empty()) return ks;
  }
  // Deterministic fallback: single type per player over the full product.
  KnowledgeStructure ks;
  ks.game = game;
  ks.types.assign(n, {"t1"});
  for (const Profile& p : profile_product(game, game.full_family())) {
    KnowledgeState s;
    s.actions = p;
    s.types.assign(n, 0);
    ks.states.push_back(std::move(s));
  }
  std::sort(ks.states.begin(), ks.states.end());
  ks.cells.resize(n);
  for (int i = 0; i < n; ++i) {
    std::map<std::pair<int, int>, StateSet> by_own;
    for (int s = 0; s < ks.num_states(); ++s)
      by_own[{ks.states[s].actions[i], ks.states[s].types[i]}].push_back(s);
    for (auto& [own, cell] : by_own) ks.cells[i].push_back(cell);
  }
  ks.rebuild_cell_map();
  return ks;
}

}  // namespace ordinal

#endif  // ORDINAL_GENERATOR_HPP_
