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

#ifndef ORDINAL_KNOWLEDGE_HPP_
#define ORDINAL_KNOWLEDGE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordinal/epistemic.hpp"
#include "ordinal/game.hpp"
#include "ordinal/solvers.hpp"

namespace ordinal {

// Partition-based models over action-type states. The state space need not
// be a product. Partitions must satisfy Introspection (a player knows her
// own action-type pair) and Independence (cells of equal own types project
// to the same opponent set); the knowledge operator then obeys the Truth
// axiom by construction.

struct KnowledgeState {
  Profile actions;          // one action per player
  std::vector<int> types;   // one type per player
  auto operator<=>(const KnowledgeState&) const = default;
};

// A set of states, kept as sorted indices into the structure's state list.
using StateSet = std::vector<int>;

struct KnowledgeStructure {
  Game game;
  std::vector<std::vector<std::string>> types;   // per player
  std::vector<KnowledgeState> states;            // sorted, unique
  std::vector<std::vector<StateSet>> cells;      // per player, cells of indices
  std::vector<std::vector<int>> cell_of;         // derived: [player][state]

  int num_states() const { return static_cast<int>(states.size()); }

  void rebuild_cell_map() {
    cell_of.assign(cells.size(), std::vector<int>(states.size(), -1));
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t c = 0; c < cells[i].size(); ++c)
        for (int s : cells[i][c]) {
          if (s >= 0 && s < num_states()) cell_of[i][s] = static_cast<int>(c);
        }
  }

  std::pair<int, int> own_pair(int player, const KnowledgeState& s) const {
    return {s.actions[player], s.types[player]};
  }

  // Opponent projection of a set of states for one player, as sorted
  // (actions, types) tuples of the others.
  std::vector<OppState> opponent_projection(int player,
                                            const StateSet& set) const {
    std::set<OppState> proj;
    for (int idx : set) {
      const KnowledgeState& s = states[idx];
      OppState o;
      for (int j = 0; j < game.num_players(); ++j)
        if (j != player) {
          o.actions.push_back(s.actions[j]);
          o.types.push_back(s.types[j]);
        }
      proj.insert(std::move(o));
    }
    return {proj.begin(), proj.end()};
  }

  std::vector<std::string> validate() const {
    std::vector<std::string> errors;
    for (const auto& e : game.validate()) errors.push_back("game: " + e);
    if (!errors.empty()) return errors;
    const int n = game.num_players();
    if (static_cast<int>(types.size()) != n ||
        static_cast<int>(cells.size()) != n) {
      errors.push_back("types/partitions do not match the player list");
      return errors;
    }
    if (states.empty()) errors.push_back("empty state space");
    for (int i = 0; i < n; ++i)
      if (types[i].empty())
        errors.push_back("player " + game.players[i] + " has no types");
    std::set<KnowledgeState> unique_states;
    for (const auto& s : states) {
      if (static_cast<int>(s.actions.size()) != n ||
          static_cast<int>(s.types.size()) != n) {
        errors.push_back("malformed state tuple");
        continue;
      }
      for (int i = 0; i < n; ++i) {
        if (s.actions[i] < 0 || s.actions[i] >= game.num_actions(i))
          errors.push_back("state references a missing action");
        if (s.types[i] < 0 || s.types[i] >= static_cast<int>(types[i].size()))
          errors.push_back("state references a missing type");
      }
      if (!unique_states.insert(s).second)
        errors.push_back("duplicate state tuple");
    }
    if (!errors.empty()) return errors;

    for (int i = 0; i < n; ++i) {
      // Partition: every state in exactly one nonempty cell.
      std::vector<int> hits(states.size(), 0);
      for (const auto& cell : cells[i]) {
        if (cell.empty())
          errors.push_back("empty partition cell for player " + game.players[i]);
        for (int s : cell) {
          if (s < 0 || s >= num_states()) {
            errors.push_back("partition cell references a missing state");
            continue;
          }
          ++hits[s];
        }
      }
      for (std::size_t s = 0; s < hits.size(); ++s) {
        if (hits[s] == 0)
          errors.push_back("partition of player " + game.players[i] +
                           " does not cover state " + std::to_string(s));
        if (hits[s] > 1)
          errors.push_back("partition cells of player " + game.players[i] +
                           " overlap at state " + std::to_string(s));
      }
      if (!errors.empty()) continue;
      // Introspection: each cell holds exactly one own action-type pair.
      for (const auto& cell : cells[i]) {
        const auto own = own_pair(i, states[cell.front()]);
        for (int s : cell)
          if (own_pair(i, states[s]) != own) {
            errors.push_back("introspection fails for player " +
                             game.players[i]);
            break;
          }
      }
      // Independence: equal own types give equal opponent projections.
      std::map<int, std::vector<OppState>> by_type;
      bool independence_ok = true;
      for (const auto& cell : cells[i]) {
        const int t = states[cell.front()].types[i];
        auto proj = opponent_projection(i, cell);
        auto [it, inserted] = by_type.emplace(t, proj);
        if (!inserted && it->second != proj) independence_ok = false;
      }
      if (!independence_ok)
        errors.push_back("independence fails for player " + game.players[i]);
    }
    return errors;
  }
};

// Validates a cell map given as state -> claimed cell, the form in which
// reflexivity can actually fail. On success the cells are canonicalized
// into the structure's partition list.
inline std::vector<std::string> adopt_cell_map(
    KnowledgeStructure* ks, int player,
    const std::vector<StateSet>& cell_of_state) {
  std::vector<std::string> errors;
  if (cell_of_state.size() != ks->states.size()) {
    errors.push_back("cell map does not cover the state space");
    return errors;
  }
  for (std::size_t s = 0; s < cell_of_state.size(); ++s) {
    const auto& cell = cell_of_state[s];
    if (!std::binary_search(cell.begin(), cell.end(), static_cast<int>(s)))
      errors.push_back("state " + std::to_string(s) +
                       " is not a member of its own cell");
    for (int other : cell)
      if (other >= 0 && other < ks->num_states() &&
          cell_of_state[other] != cell)
        errors.push_back("cells of states " + std::to_string(s) + " and " +
                         std::to_string(other) + " disagree (not a partition)");
  }
  if (!errors.empty()) return errors;
  std::set<StateSet> unique(cell_of_state.begin(), cell_of_state.end());
  ks->cells[player].assign(unique.begin(), unique.end());
  ks->rebuild_cell_map();
  return errors;
}

// K_i(E) = { state : its cell sits inside E }. The Truth axiom K_i(E) <= E
// is asserted on every call.
inline StateSet knowledge_operator(const KnowledgeStructure& ks, int player,
                                   const StateSet& event) {
  StateSet out;
  for (int s = 0; s < ks.num_states(); ++s) {
    const auto& cell = ks.cells[player][ks.cell_of[player][s]];
    bool inside = true;
    for (int member : cell)
      if (!std::binary_search(event.begin(), event.end(), member)) {
        inside = false;
        break;
      }
    if (inside) out.push_back(s);
  }
  for (int s : out)
    if (!std::binary_search(event.begin(), event.end(), s))
      throw std::logic_error("truth axiom violated; internal defect");
  return out;
}

inline StateSet knowledge_all(const KnowledgeStructure& ks, const StateSet& event) {
  StateSet acc = knowledge_operator(ks, 0, event);
  for (int i = 1; i < ks.game.num_players(); ++i) {
    const StateSet next = knowledge_operator(ks, i, event);
    StateSet merged;
    std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                          std::back_inserter(merged));
    acc = std::move(merged);
  }
  return acc;
}

// K^0(E) = E, K^m(E) = K(K^{m-1}(E)); decreasing by the Truth axiom, so the
// chain stabilizes and the fixed point is the common-knowledge event.
struct KnowledgeChain {
  std::vector<StateSet> levels;
  int fixed_index = 0;

  const StateSet& at(int n) const {
    return levels[std::min<std::size_t>(n, levels.size() - 1)];
  }
  const StateSet& fixed_point() const { return levels[fixed_index]; }
};

inline KnowledgeChain common_knowledge_chain(
    const KnowledgeStructure& ks, const StateSet& event,
    std::optional<int> depth = std::nullopt) {
  KnowledgeChain chain;
  chain.levels.push_back(event);
  for (int m = 1;; ++m) {
    const StateSet next = knowledge_all(ks, chain.levels.back());
    const bool fixed = next == chain.levels.back();
    chain.levels.push_back(next);
    if (fixed || (depth && m >= *depth)) {
      chain.fixed_index = fixed ? static_cast<int>(chain.levels.size()) - 2 : -1;
      return chain;
    }
  }
}

// The optimism event of a partition model: states where every player's own
// action maximizes the best case over the opponent actions her cell deems
// possible.
inline StateSet optimism_states(const KnowledgeStructure& ks) {
  StateSet out;
  for (int s = 0; s < ks.num_states(); ++s) {
    bool all_optimistic = true;
    for (int i = 0; i < ks.game.num_players() && all_optimistic; ++i) {
      const auto& cell = ks.cells[i][ks.cell_of[i][s]];
      std::set<OppProfile> possible;
      for (int member : cell)
        possible.insert(ks.game.opponents_of(i, ks.states[member].actions));
      const std::vector<OppProfile> belief(possible.begin(), possible.end());
      const auto best = optimistic_best_replies(ks.game, i, belief);
      if (std::find(best.begin(), best.end(), ks.states[s].actions[i]) ==
          best.end())
        all_optimistic = false;
    }
    if (all_optimistic) out.push_back(s);
  }
  return out;
}

inline std::vector<Profile> project_state_actions(const KnowledgeStructure& ks,
                                                  const StateSet& set) {
  std::set<Profile> proj;
  for (int s : set) proj.insert(ks.states[s].actions);
  return {proj.begin(), proj.end()};
}

// proj_A K^n(Opt) within YR^{n+1}, for every n up to both fixed points.
struct WtReport {
  std::vector<bool> holds;
  std::vector<bool> equals;
  bool limit_holds = false;
  std::vector<std::string> violations;

  bool all_hold() const {
    if (!limit_holds) return false;
    for (bool h : holds)
      if (!h) return false;
    return true;
  }
};

inline WtReport check_wt_theorem(const KnowledgeStructure& ks) {
  WtReport report;
  const Trace trace = wishful_thinking(ks.game);
  const KnowledgeChain chain = common_knowledge_chain(ks, optimism_states(ks));
  const int horizon = std::max(chain.fixed_index, trace.fixed_point_round) + 1;
  auto within = [](const std::vector<Profile>& a, const std::vector<Profile>& b) {
    for (const Profile& p : a)
      if (!std::binary_search(b.begin(), b.end(), p)) return false;
    return true;
  };
  for (int n = 0; n <= horizon; ++n) {
    const auto proj = project_state_actions(ks, chain.at(n));
    const auto& target = trace.profiles_at(n + 1);
    const bool holds = within(proj, target);
    report.holds.push_back(holds);
    report.equals.push_back(proj == target);
    if (!holds)
      report.violations.push_back("level " + std::to_string(n) +
                                  ": projection escapes the procedure round");
  }
  const auto lim = project_state_actions(ks, chain.fixed_point());
  report.limit_holds = within(lim, trace.fixed_profiles());
  if (!report.limit_holds)
    report.violations.push_back("fixed point: projection escapes the limit set");
  return report;
}

// Reads a possibility structure off a partition model: same types,
// pi_i(t_i) = opponent projection of any cell with own type t_i.
// Well-definedness comes from Independence and is asserted. Types that
// never occur in a state are dropped (a possibility map must cover every
// declared type).
inline PossibilityStructure possibility_from_knowledge(
    const KnowledgeStructure& ks) {
  const int n = ks.game.num_players();
  PossibilityStructure ps;
  ps.game = ks.game;
  ps.types.resize(n);
  ps.pi.resize(n);
  std::vector<std::vector<int>> remap(n);  // old type id -> new id or -1
  for (int i = 0; i < n; ++i) {
    remap[i].assign(ks.types[i].size(), -1);
    for (const auto& s : ks.states)
      if (remap[i][s.types[i]] < 0) {
        remap[i][s.types[i]] = static_cast<int>(ps.types[i].size());
        ps.types[i].push_back(ks.types[i][s.types[i]]);
      }
    ps.pi[i].resize(ps.types[i].size());
  }
  for (int i = 0; i < n; ++i) {
    std::vector<bool> filled(ps.types[i].size(), false);
    for (int s = 0; s < ks.num_states(); ++s) {
      const int old_type = ks.states[s].types[i];
      const int new_type = remap[i][old_type];
      auto proj = ks.opponent_projection(i, ks.cells[i][ks.cell_of[i][s]]);
      for (OppState& o : proj) {
        int k = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          o.types[k] = remap[j][o.types[k]];
          ++k;
        }
      }
      std::sort(proj.begin(), proj.end());
      if (!filled[new_type]) {
        ps.pi[i][new_type] = proj;
        filled[new_type] = true;
      } else if (ps.pi[i][new_type] != proj) {
        throw std::logic_error(
            "independence violated when deriving possibilities; internal defect");
      }
    }
  }
  return ps;
}

// On a full-product state space, the only interactive event a player can
// know is the whole space. Checked by enumerating the nonempty opponent
// events (exactly when their count fits the exhaustive budget, sampled
// deterministically otherwise).
struct ProductTrivialityReport {
  bool precondition_ok = false;
  bool exhaustive = false;
  std::size_t events_checked = 0;
  std::vector<std::string> violations;

  bool passed() const { return precondition_ok && violations.empty(); }
};

inline ProductTrivialityReport product_triviality_check(
    const KnowledgeStructure& ks, int max_exhaustive_bits = 16,
    std::size_t sample_count = 4096, std::uint64_t seed = 0) {
  ProductTrivialityReport report;
  const int n = ks.game.num_players();
  // Precondition: the state space is the full product.
  std::size_t expected = 1;
  for (int i = 0; i < n; ++i)
    expected *= ks.game.num_actions(i) * ks.types[i].size();
  if (ks.states.size() != expected) return report;
  report.precondition_ok = true;

  for (int i = 0; i < n; ++i) {
    // The opponent space, indexed canonically.
    std::vector<OppState> opponent_space =
        ks.opponent_projection(i, [&] {
          StateSet all(ks.num_states());
          for (int s = 0; s < ks.num_states(); ++s) all[s] = s;
          return all;
        }());
    const std::size_t k = opponent_space.size();
    auto event_of_mask = [&](const std::vector<bool>& mask) {
      StateSet event;
      for (int s = 0; s < ks.num_states(); ++s) {
        OppState o;
        for (int j = 0; j < n; ++j)
          if (j != i) {
            o.actions.push_back(ks.states[s].actions[j]);
            o.types.push_back(ks.states[s].types[j]);
          }
        const auto it =
            std::lower_bound(opponent_space.begin(), opponent_space.end(), o);
        if (mask[it - opponent_space.begin()]) event.push_back(s);
      }
      return event;
    };
    auto check_mask = [&](const std::vector<bool>& mask) {
      bool full = true;
      for (bool b : mask)
        if (!b) full = false;
      const StateSet known = knowledge_operator(ks, i, event_of_mask(mask));
      ++report.events_checked;
      if (known.empty() == full)
        report.violations.push_back(
            "player " + ks.game.players[i] +
            (full ? ": full opponent event is unknown"
                  : ": a proper opponent event is known"));
    };
    if (k <= static_cast<std::size_t>(max_exhaustive_bits)) {
      report.exhaustive = true;
      for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<bool> bits(k);
        for (std::size_t b = 0; b < k; ++b) bits[b] = (mask >> b) & 1;
        check_mask(bits);
      }
    } else {
      report.exhaustive = false;
      // Always check the full event and every one-element-removed event.
      std::vector<bool> full(k, true);
      check_mask(full);
      for (std::size_t drop = 0; drop < k; ++drop) {
        std::vector<bool> bits(k, true);
        bits[drop] = false;
        check_mask(bits);
      }
      std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      auto next_bit = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return (state >> 33) & 1;
      };
      for (std::size_t draw = 0; draw < sample_count; ++draw) {
        std::vector<bool> bits(k);
        bool any = false;
        for (std::size_t b = 0; b < k; ++b) {
          bits[b] = next_bit();
          any = any || bits[b];
        }
        if (!any) bits[0] = true;
        check_mask(bits);
      }
    }
  }
  return report;
}

}  // namespace ordinal

#endif  // ORDINAL_KNOWLEDGE_HPP_
