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

#ifndef ORDINAL_EPISTEMIC_HPP_
#define ORDINAL_EPISTEMIC_HPP_

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordinal/criteria.hpp"
#include "ordinal/game.hpp"
#include "ordinal/solvers.hpp"

namespace ordinal {

// Finite type-based models with non-probabilistic beliefs. A type of a
// player maps to a nonempty set of opponent (action, type) tuples; events
// are per-player subsets of A_i x T_i with product semantics.

// One element of a possibility image: the opponents' actions and types, in
// player order with the owner skipped.
struct OppState {
  OppProfile actions;
  std::vector<int> types;
  auto operator<=>(const OppState&) const = default;
};

struct PossibilityStructure {
  Game game;
  std::vector<std::vector<std::string>> types;            // per player
  std::vector<std::vector<std::vector<OppState>>> pi;     // [player][type]

  int num_types(int player) const {
    return static_cast<int>(types[player].size());
  }

  int type_id(int player, const std::string& name) const {
    const auto& list = types[player];
    auto it = std::find(list.begin(), list.end(), name);
    if (it == list.end())
      throw std::out_of_range("unknown type '" + name + "'");
    return static_cast<int>(it - list.begin());
  }

  // First-order belief: the action projection of the possibility image.
  std::vector<OppProfile> fob(int player, int type) const {
    std::set<OppProfile> proj;
    for (const OppState& s : pi[player][type]) proj.insert(s.actions);
    return {proj.begin(), proj.end()};
  }

  std::vector<std::string> validate() const {
    std::vector<std::string> errors;
    for (const auto& e : game.validate()) errors.push_back("game: " + e);
    if (!errors.empty()) return errors;
    const int n = game.num_players();
    if (static_cast<int>(types.size()) != n ||
        static_cast<int>(pi.size()) != n) {
      errors.push_back("types/possibility maps do not match the player list");
      return errors;
    }
    for (int i = 0; i < n; ++i) {
      if (types[i].empty())
        errors.push_back("player " + game.players[i] + " has no types");
      std::set<std::string> seen;
      for (const auto& t : types[i])
        if (!seen.insert(t).second)
          errors.push_back("duplicate type '" + t + "' for player " +
                           game.players[i]);
      if (pi[i].size() != types[i].size()) {
        errors.push_back("possibility map of player " + game.players[i] +
                         " does not cover every type");
        continue;
      }
      for (std::size_t t = 0; t < pi[i].size(); ++t) {
        if (pi[i][t].empty())
          errors.push_back("empty possibility image at type " + types[i][t] +
                           " of player " + game.players[i]);
        for (const OppState& s : pi[i][t]) {
          if (static_cast<int>(s.actions.size()) != n - 1 ||
              static_cast<int>(s.types.size()) != n - 1) {
            errors.push_back("malformed opponent state at type " + types[i][t]);
            continue;
          }
          int k = 0;
          for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (s.actions[k] < 0 || s.actions[k] >= game.num_actions(j))
              errors.push_back("possibility image at type " + types[i][t] +
                               " references a missing action");
            if (s.types[k] < 0 ||
                s.types[k] >= static_cast<int>(types[j].size()))
              errors.push_back("possibility image at type " + types[i][t] +
                               " references a missing type");
            ++k;
          }
        }
      }
    }
    return errors;
  }
};

// A product event: per player a subset of A_i x T_i. The joint event is the
// product of the parts, so one empty part empties the whole event.
struct Event {
  std::vector<std::vector<std::pair<int, int>>> parts;  // sorted (action, type)

  bool operator==(const Event&) const = default;

  bool joint_empty() const {
    for (const auto& p : parts)
      if (p.empty()) return true;
    return parts.empty();
  }
};

inline Event full_event(const PossibilityStructure& ps) {
  Event e;
  e.parts.resize(ps.game.num_players());
  for (int i = 0; i < ps.game.num_players(); ++i)
    for (int a = 0; a < ps.game.num_actions(i); ++a)
      for (int t = 0; t < ps.num_types(i); ++t) e.parts[i].emplace_back(a, t);
  return e;
}

inline Event empty_event(const PossibilityStructure& ps) {
  Event e;
  e.parts.resize(ps.game.num_players());
  return e;
}

inline Event intersect(const Event& a, const Event& b) {
  Event out;
  out.parts.resize(a.parts.size());
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    std::set_intersection(a.parts[i].begin(), a.parts[i].end(),
                          b.parts[i].begin(), b.parts[i].end(),
                          std::back_inserter(out.parts[i]));
  return out;
}

inline bool event_subset(const Event& a, const Event& b) {
  if (a.joint_empty()) return true;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (!std::includes(b.parts[i].begin(), b.parts[i].end(), a.parts[i].begin(),
                       a.parts[i].end()))
      return false;
  return true;
}

// The belief operator of one player applied to the opponents' parts of a
// product event: every (a_i, t_i) whose possibility image sits inside the
// product. The own-action coordinate is unconstrained.
inline std::vector<std::pair<int, int>> belief_part(
    const PossibilityStructure& ps, int player, const Event& event) {
  std::vector<std::pair<int, int>> out;
  const int n = ps.game.num_players();
  for (int t = 0; t < ps.num_types(player); ++t) {
    bool inside = true;
    for (const OppState& s : ps.pi[player][t]) {
      int k = 0;
      for (int j = 0; j < n && inside; ++j) {
        if (j == player) continue;
        const std::pair<int, int> pair{s.actions[k], s.types[k]};
        if (!std::binary_search(event.parts[j].begin(), event.parts[j].end(),
                                pair))
          inside = false;
        ++k;
      }
      if (!inside) break;
    }
    if (inside)
      for (int a = 0; a < ps.game.num_actions(player); ++a)
        out.emplace_back(a, t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Event belief_event(const PossibilityStructure& ps, const Event& event) {
  Event out;
  out.parts.resize(ps.game.num_players());
  for (int i = 0; i < ps.game.num_players(); ++i)
    out.parts[i] = belief_part(ps, i, event);
  return out;
}

// Attitude events, all computed from the first-order belief of each type.
enum class Attitude {
  kOptimistic,
  kPessimistic,
  kAdmissible,
  kOptimisticPointBelief,  // optimism intersected with singleton beliefs
};

inline const char* attitude_tag(Attitude a) {
  switch (a) {
    case Attitude::kOptimistic: return "opt";
    case Attitude::kPessimistic: return "pes";
    case Attitude::kAdmissible: return "adm";
    case Attitude::kOptimisticPointBelief: return "optdeg";
  }
  return "?";
}

inline std::optional<Attitude> attitude_from_tag(const std::string& tag) {
  for (Attitude a : {Attitude::kOptimistic, Attitude::kPessimistic,
                     Attitude::kAdmissible, Attitude::kOptimisticPointBelief})
    if (tag == attitude_tag(a)) return a;
  return std::nullopt;
}

namespace epistemic_detail {

template <typename ChooseFn>
Event event_from_criterion(const PossibilityStructure& ps, ChooseFn choose) {
  Event e;
  e.parts.resize(ps.game.num_players());
  for (int i = 0; i < ps.game.num_players(); ++i)
    for (int t = 0; t < ps.num_types(i); ++t)
      for (int a : choose(i, ps.fob(i, t))) e.parts[i].emplace_back(a, t);
  for (auto& part : e.parts) std::sort(part.begin(), part.end());
  return e;
}

}  // namespace epistemic_detail

inline Event event_optimistic(const PossibilityStructure& ps) {
  return epistemic_detail::event_from_criterion(
      ps, [&](int i, const std::vector<OppProfile>& fob) {
        return optimistic_best_replies(ps.game, i, fob);
      });
}

inline Event event_pessimistic(const PossibilityStructure& ps) {
  return epistemic_detail::event_from_criterion(
      ps, [&](int i, const std::vector<OppProfile>& fob) {
        return pessimistic_best_replies(ps.game, i, fob);
      });
}

inline Event event_admissible(const PossibilityStructure& ps) {
  return epistemic_detail::event_from_criterion(
      ps, [&](int i, const std::vector<OppProfile>& fob) {
        return admissible_set(ps.game, i, fob);
      });
}

// All (a_i, t_i) whose type holds a singleton possibility image.
inline Event event_point_belief(const PossibilityStructure& ps) {
  Event e;
  e.parts.resize(ps.game.num_players());
  for (int i = 0; i < ps.game.num_players(); ++i) {
    for (int t = 0; t < ps.num_types(i); ++t)
      if (ps.pi[i][t].size() == 1)
        for (int a = 0; a < ps.game.num_actions(i); ++a)
          e.parts[i].emplace_back(a, t);
    std::sort(e.parts[i].begin(), e.parts[i].end());
  }
  return e;
}

// All (a_i, t_i) where a_i is a best reply to every opponent profile the
// type deems possible (and to at least one profile overall).
inline Event event_point_justifiable(const PossibilityStructure& ps) {
  Event e;
  e.parts.resize(ps.game.num_players());
  for (int i = 0; i < ps.game.num_players(); ++i) {
    const auto full = opp_product(ps.game, i);
    std::vector<std::vector<OppProfile>> point_supports(ps.game.num_actions(i));
    for (const OppProfile& opp : full) {
      for (int a : optimistic_best_replies(ps.game, i, {opp}))
        point_supports[a].push_back(opp);
    }
    for (int t = 0; t < ps.num_types(i); ++t) {
      const auto fob = ps.fob(i, t);
      for (int a = 0; a < ps.game.num_actions(i); ++a) {
        const auto& support = point_supports[a];
        if (support.empty()) continue;
        bool covered = true;
        for (const auto& opp : fob)
          if (std::find(support.begin(), support.end(), opp) == support.end()) {
            covered = false;
            break;
          }
        if (covered) e.parts[i].emplace_back(a, t);
      }
    }
    std::sort(e.parts[i].begin(), e.parts[i].end());
  }
  return e;
}

inline Event attitude_event(const PossibilityStructure& ps, Attitude a) {
  switch (a) {
    case Attitude::kOptimistic: return event_optimistic(ps);
    case Attitude::kPessimistic: return event_pessimistic(ps);
    case Attitude::kAdmissible: return event_admissible(ps);
    case Attitude::kOptimisticPointBelief:
      return intersect(event_optimistic(ps), event_point_belief(ps));
  }
  throw std::logic_error("unknown attitude");
}

// The chain E^0 = Att, E^m = Att intersect Bel(E^{m-1}), stopping at the
// first repetition (finiteness guarantees one). Every level is also
// recomputed through the per-player recursion
//   E^m_i = E^{m-1}_i intersect Bel_i(E^{m-1} opponents)
// and the two must agree; a mismatch is an internal defect.
struct BeliefChain {
  std::vector<Event> levels;  // last two entries equal
  int fixed_index = 0;

  const Event& at(int n) const {
    return levels[std::min<std::size_t>(n, levels.size() - 1)];
  }
  const Event& fixed_point() const { return levels[fixed_index]; }
};

inline BeliefChain common_belief_chain(const PossibilityStructure& ps,
                                       const Event& attitude,
                                       std::optional<int> depth = std::nullopt) {
  BeliefChain chain;
  chain.levels.push_back(attitude);
  for (int m = 1;; ++m) {
    const Event& prev = chain.levels.back();
    const Event believed = belief_event(ps, prev);
    const Event next = intersect(attitude, believed);
    const Event recursed = intersect(prev, believed);
    if (!(next == recursed))
      throw std::logic_error(
          "common-belief recursion mismatch; internal defect");
    const bool fixed = next == prev;
    chain.levels.push_back(next);
    if (fixed || (depth && m >= *depth)) {
      chain.fixed_index =
          fixed ? static_cast<int>(chain.levels.size()) - 2 : -1;
      return chain;
    }
  }
}

// Action projection of a product event: per player the actions appearing in
// the part; the joint projection is their product (empty if any part is).
struct ActionProjection {
  Family per_player;
  bool empty = false;

  std::vector<Profile> profiles(const Game& game) const {
    if (empty) return {};
    return profile_product(game, per_player);
  }

  bool operator==(const ActionProjection&) const = default;
};

inline ActionProjection project_actions(const Event& event) {
  ActionProjection proj;
  proj.per_player.resize(event.parts.size());
  for (std::size_t i = 0; i < event.parts.size(); ++i) {
    std::set<int> acts;
    for (const auto& [a, t] : event.parts[i]) acts.insert(a);
    proj.per_player[i].assign(acts.begin(), acts.end());
    if (acts.empty()) proj.empty = true;
  }
  return proj;
}

inline bool projection_within(const ActionProjection& proj, const Family& family) {
  if (proj.empty) return true;
  return family_subset(proj.per_player, family);
}

inline bool projection_equals(const ActionProjection& proj, const Family& family) {
  return !proj.empty && proj.per_player == family;
}

inline SolutionConcept matching_concept(Attitude a) {
  switch (a) {
    case Attitude::kOptimistic: return SolutionConcept::kPoint;
    case Attitude::kPessimistic: return SolutionConcept::kMaxmin;
    case Attitude::kAdmissible: return SolutionConcept::kBorgers;
    case Attitude::kOptimisticPointBelief: return SolutionConcept::kPoint;
  }
  throw std::logic_error("unknown attitude");
}

// Checks proj_A CB^n(Att) within AR^{n+1} for every n up to both fixed
// points, plus the same at the fixed points. A violation indicates an
// implementation defect, not bad input.
struct InclusionReport {
  Attitude attitude = Attitude::kOptimistic;
  std::vector<bool> holds;
  std::vector<bool> equals;
  bool limit_holds = false;
  bool limit_equals = false;
  std::vector<std::string> violations;

  bool all_hold() const {
    if (!limit_holds) return false;
    for (bool h : holds)
      if (!h) return false;
    return true;
  }
};

inline InclusionReport check_inclusion_theorem(const PossibilityStructure& ps,
                                               Attitude attitude) {
  InclusionReport report;
  report.attitude = attitude;
  const Event att = attitude_event(ps, attitude);
  const BeliefChain chain = common_belief_chain(ps, att);
  const Trace trace = solve(ps.game, matching_concept(attitude));
  const int horizon =
      std::max(chain.fixed_index, trace.fixed_point_round) + 1;
  for (int n = 0; n <= horizon; ++n) {
    const ActionProjection proj = project_actions(chain.at(n));
    const Family& target = trace.family_at(n + 1);
    const bool holds = projection_within(proj, target);
    report.holds.push_back(holds);
    report.equals.push_back(projection_equals(proj, target));
    if (!holds)
      report.violations.push_back("level " + std::to_string(n) +
                                  ": projection escapes the procedure round");
  }
  const ActionProjection lim = project_actions(chain.fixed_point());
  report.limit_holds = projection_within(lim, trace.fixed_family());
  report.limit_equals = projection_equals(lim, trace.fixed_family());
  if (!report.limit_holds)
    report.violations.push_back("fixed point: projection escapes the limit set");
  return report;
}

// Builds a finite structure realizing the procedure rounds exactly: one
// type per surviving action per round, plus loop types for the fixed point
// and a sink per player. Level-m types believe the witnessing opponents at
// level m-1; loop types believe loop types, closing the cycle. The result
// is model-checked for per-level equality before being returned.
inline PossibilityStructure build_witness_structure(const Game& game,
                                                    Attitude attitude) {
  if (attitude == Attitude::kOptimisticPointBelief)
    throw std::invalid_argument("witness construction targets opt/pes/adm");
  const Trace trace = solve(game, matching_concept(attitude));
  const int top = trace.fixed_point_round;  // levels 0..top, plus the loop
  const int n = game.num_players();

  PossibilityStructure ps;
  ps.game = game;
  ps.types.resize(n);
  ps.pi.resize(n);

  // Type bookkeeping: level -1 stands for the loop ("inf") level.
  std::vector<std::map<std::pair<int, int>, int>> type_index(n);
  std::vector<int> sink(n);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m <= top; ++m)
      for (int a : trace.rounds[m + 1][i]) {
        type_index[i][{m, a}] = static_cast<int>(ps.types[i].size());
        ps.types[i].push_back(game.actions[i][a] + "@" + std::to_string(m));
      }
    for (int a : trace.fixed_family()[i]) {
      type_index[i][{-1, a}] = static_cast<int>(ps.types[i].size());
      ps.types[i].push_back(game.actions[i][a] + "@inf");
    }
    sink[i] = static_cast<int>(ps.types[i].size());
    ps.types[i].push_back("sink");
    ps.pi[i].resize(ps.types[i].size());
  }

  // A supporting belief for (player, action) drawn from the round-m sets
  // (m == -1 uses the fixed point).
  auto find_belief = [&](int i, int action, int m) -> std::vector<OppProfile> {
    const Family& base = m < 0 ? trace.fixed_family() : trace.rounds[m];
    const auto product = opp_product(game, i, base);
    if (attitude == Attitude::kOptimistic) {
      for (const OppProfile& opp : product)
        if (solver_detail::contains(optimistic_best_replies(game, i, {opp}),
                                    action))
          return {opp};
      throw std::logic_error("no supporting point belief; internal defect");
    }
    std::vector<OppProfile> found;
    for_each_belief_subset(product, [&](const std::vector<OppProfile>& subset) {
      const bool good =
          attitude == Attitude::kPessimistic
              ? solver_detail::contains(
                    pessimistic_best_replies(game, i, subset), action)
              : !weakly_dominated(game, i, action, subset);
      if (good) {
        found = subset;
        return false;
      }
      return true;
    });
    if (found.empty())
      throw std::logic_error("no supporting belief subset; internal defect");
    return found;
  };

  // The opponent type holding action a_j at the level below m.
  auto target_type = [&](int j, int a, int m) -> int {
    if (m < 0) return type_index[j].at({-1, a});
    if (m == 0) {
      auto it = type_index[j].find({0, a});
      return it == type_index[j].end() ? sink[j] : it->second;
    }
    return type_index[j].at({m - 1, a});
  };

  for (int i = 0; i < n; ++i) {
    for (const auto& [key, tid] : type_index[i]) {
      const auto [level, action] = key;
      for (const OppProfile& opp : find_belief(i, action, level)) {
        OppState s;
        s.actions = opp;
        int k = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          s.types.push_back(target_type(j, opp[k], level));
          ++k;
        }
        ps.pi[i][tid].push_back(s);
      }
      std::sort(ps.pi[i][tid].begin(), ps.pi[i][tid].end());
    }
    // The sink believes everything is possible among sinks; it carries no
    // attitude constraint and falls out of the chain at the first level
    // whenever some opponent action is not a criterion choice there.
    for (const OppProfile& opp : opp_product(game, i)) {
      OppState s;
      s.actions = opp;
      for (int j = 0; j < n; ++j)
        if (j != i) s.types.push_back(sink[j]);
      ps.pi[i][sink[i]].push_back(s);
    }
    std::sort(ps.pi[i][sink[i]].begin(), ps.pi[i][sink[i]].end());
  }

  {
    auto errors = ps.validate();
    if (!errors.empty())
      throw std::logic_error("witness structure invalid: " + errors.front());
    const Attitude check_att = attitude;
    const auto report = check_inclusion_theorem(ps, check_att);
    bool exact = report.limit_equals;
    for (int nlev = 0; nlev <= trace.fixed_point_round; ++nlev)
      if (nlev >= static_cast<int>(report.equals.size()) || !report.equals[nlev])
        exact = false;
    if (!report.all_hold() || !exact)
      throw std::logic_error(
          "witness structure failed its model check; internal defect");
  }
  return ps;
}

}  // namespace ordinal

#endif  // ORDINAL_EPISTEMIC_HPP_
