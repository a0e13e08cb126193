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

#ifndef ORDINAL_CRITERIA_HPP_
#define ORDINAL_CRITERIA_HPP_

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordinal/game.hpp"
#include "ordinal/lp.hpp"

namespace ordinal {

// Single-agent choice criteria under a coarse belief: a belief is a
// nonempty set of opponent action profiles standing in for a probabilistic
// belief. Best replies maximize the best case (max-max) or the worst case
// (max-min) over the belief; the dominance tests below never use
// floating point.

// Best-case best replies: argmax_{a_i} max_{a_-i in belief} u_i. The argmax
// runs over the player's full action set and keeps all ties.
inline std::vector<int> optimistic_best_replies(
    const Game& game, int player, const std::vector<OppProfile>& belief) {
  if (belief.empty()) throw std::invalid_argument("empty belief");
  std::vector<int> best;
  Rational best_score;
  for (int a = 0; a < game.num_actions(player); ++a) {
    Rational score = game.payoff_vs(player, a, belief.front());
    for (const auto& opp : belief) {
      const Rational& u = game.payoff_vs(player, a, opp);
      if (u > score) score = u;
    }
    if (best.empty() || score > best_score) {
      best.assign(1, a);
      best_score = score;
    } else if (score == best_score) {
      best.push_back(a);
    }
  }
  return best;
}

// Worst-case (maxmin) best replies: argmax_{a_i} min_{a_-i in belief} u_i.
inline std::vector<int> pessimistic_best_replies(
    const Game& game, int player, const std::vector<OppProfile>& belief) {
  if (belief.empty()) throw std::invalid_argument("empty belief");
  std::vector<int> best;
  Rational best_score;
  for (int a = 0; a < game.num_actions(player); ++a) {
    Rational score = game.payoff_vs(player, a, belief.front());
    for (const auto& opp : belief) {
      const Rational& u = game.payoff_vs(player, a, opp);
      if (u < score) score = u;
    }
    if (best.empty() || score > best_score) {
      best.assign(1, a);
      best_score = score;
    } else if (score == best_score) {
      best.push_back(a);
    }
  }
  return best;
}

inline std::vector<int> all_actions(const Game& game, int player) {
  std::vector<int> out(game.num_actions(player));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<int>(k);
  return out;
}

// First dominator (in canonical action order) that is weakly better than
// `action` against every profile of the restriction and strictly better
// against at least one; nullopt when the action is admissible. Dominators
// are drawn from `dominators` (the full action set in standalone use, the
// surviving set inside iterated procedures).
inline std::optional<int> weakly_dominated(
    const Game& game, int player, int action,
    const std::vector<OppProfile>& restriction,
    const std::vector<int>& dominators) {
  if (restriction.empty()) throw std::invalid_argument("empty restriction");
  for (int d : dominators) {
    if (d == action) continue;
    bool weak = true, strict = false;
    for (const auto& opp : restriction) {
      const int cmp =
          game.payoff_vs(player, d, opp).compare(game.payoff_vs(player, action, opp));
      if (cmp < 0) {
        weak = false;
        break;
      }
      if (cmp > 0) strict = true;
    }
    if (weak && strict) return d;
  }
  return std::nullopt;
}

inline std::optional<int> weakly_dominated(
    const Game& game, int player, int action,
    const std::vector<OppProfile>& restriction) {
  return weakly_dominated(game, player, action, restriction,
                          all_actions(game, player));
}

// The admissible candidates: those not weakly dominated relative to the
// restriction. Nonempty whenever candidates == dominators (a finite set
// always has a weakly undominated element).
inline std::vector<int> admissible_set(const Game& game, int player,
                                       const std::vector<OppProfile>& restriction,
                                       const std::vector<int>& candidates,
                                       const std::vector<int>& dominators) {
  std::vector<int> out;
  for (int a : candidates)
    if (!weakly_dominated(game, player, a, restriction, dominators))
      out.push_back(a);
  return out;
}

inline std::vector<int> admissible_set(
    const Game& game, int player, const std::vector<OppProfile>& restriction) {
  const auto all = all_actions(game, player);
  return admissible_set(game, player, restriction, all, all);
}

struct BorgersCheck {
  bool dominated = false;
  // When dominated: one weak dominator per enumerated subset.
  std::vector<std::pair<std::vector<OppProfile>, int>> subset_dominators;
  // When not dominated: the first subset where the action is admissible.
  std::optional<std::vector<OppProfile>> admissible_subset;
};

// An action is dominated in this sense iff it is inadmissible with respect
// to every nonempty subset of the restriction. Subsets are visited in the
// canonical enumeration order and the scan stops at the first admissible
// one.
inline BorgersCheck borgers_dominated(const Game& game, int player, int action,
                                      const std::vector<OppProfile>& restriction,
                                      const std::vector<int>& dominators) {
  if (restriction.empty()) throw std::invalid_argument("empty restriction");
  BorgersCheck check;
  check.dominated = true;
  for_each_belief_subset(restriction, [&](const std::vector<OppProfile>& subset) {
    auto dom = weakly_dominated(game, player, action, subset, dominators);
    if (!dom) {
      check.dominated = false;
      check.admissible_subset = subset;
      return false;
    }
    check.subset_dominators.emplace_back(subset, *dom);
    return true;
  });
  if (!check.dominated) check.subset_dominators.clear();
  return check;
}

inline BorgersCheck borgers_dominated(
    const Game& game, int player, int action,
    const std::vector<OppProfile>& restriction) {
  return borgers_dominated(game, player, action, restriction,
                           all_actions(game, player));
}

// First pure action strictly better against every profile in the
// restriction, or nullopt.
inline std::optional<int> strictly_dominated_pure(
    const Game& game, int player, int action,
    const std::vector<OppProfile>& restriction,
    const std::vector<int>& dominators) {
  if (restriction.empty()) throw std::invalid_argument("empty restriction");
  for (int d : dominators) {
    if (d == action) continue;
    bool strict = true;
    for (const auto& opp : restriction)
      if (game.payoff_vs(player, d, opp) <= game.payoff_vs(player, action, opp)) {
        strict = false;
        break;
      }
    if (strict) return d;
  }
  return std::nullopt;
}

inline std::optional<int> strictly_dominated_pure(
    const Game& game, int player, int action,
    const std::vector<OppProfile>& restriction) {
  return strictly_dominated_pure(game, player, action, restriction,
                                 all_actions(game, player));
}

// A mixture over a player's actions; weights are positive exact rationals
// summing to one and the support is listed in canonical action order.
struct MixedAction {
  int owner = -1;
  std::vector<std::pair<int, Rational>> weights;
};

// Searches for a mixture over `support` strictly better than `action`
// against every profile of the restriction. Decided by an exact-rational
// linear program: maximize the minimum dominance slack; the action is
// dominated iff the optimum is strictly positive. A solver failure is an
// internal defect, never "not dominated".
inline std::optional<MixedAction> strictly_dominated_mixed(
    const Game& game, int player, int action,
    const std::vector<OppProfile>& restriction,
    const std::vector<int>& support) {
  if (restriction.empty()) throw std::invalid_argument("empty restriction");
  for (int s : support)
    if (s == action)
      throw std::invalid_argument("support must exclude the tested action");
  if (support.empty()) return std::nullopt;

  const int k = static_cast<int>(support.size());
  const int m = static_cast<int>(restriction.size());
  // Variables: sigma_1..sigma_k, eps_plus, eps_minus, slack_1..slack_m.
  LinearProgram lp;
  const int vars = k + 2 + m;
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> row(vars, Rational(0));
    for (int s = 0; s < k; ++s)
      row[s] = game.payoff_vs(player, support[s], restriction[j]) -
               game.payoff_vs(player, action, restriction[j]);
    row[k] = -1;      // eps_plus
    row[k + 1] = 1;   // eps_minus
    row[k + 2 + j] = -1;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(Rational(0));
  }
  std::vector<Rational> sum_row(vars, Rational(0));
  for (int s = 0; s < k; ++s) sum_row[s] = 1;
  lp.rows.push_back(std::move(sum_row));
  lp.rhs.push_back(Rational(1));
  lp.objective.assign(vars, Rational(0));
  lp.objective[k] = 1;
  lp.objective[k + 1] = -1;

  const LpResult res = solve_lp(lp);
  if (res.status != LpResult::Status::kOptimal)
    throw std::logic_error("dominance LP failed to solve; internal defect");
  if (res.objective <= 0) return std::nullopt;

  MixedAction mix;
  mix.owner = player;
  for (int s = 0; s < k; ++s)
    if (res.solution[s] > 0) mix.weights.emplace_back(support[s], res.solution[s]);
  // The returned witness must re-verify by direct inequality checks.
  Rational total(0);
  for (const auto& [a, w] : mix.weights) total += w;
  if (total != 1) throw std::logic_error("dominance LP returned a non-mixture");
  for (const auto& opp : restriction) {
    Rational mixed(0);
    for (const auto& [a, w] : mix.weights)
      mixed += w * game.payoff_vs(player, a, opp);
    if (mixed <= game.payoff_vs(player, action, opp))
      throw std::logic_error("dominance LP witness does not re-verify");
  }
  return mix;
}

struct DominanceWitness {
  enum class Kind { kWeakPure, kStrictPure, kStrictMixed, kBorgers };
  Kind kind = Kind::kWeakPure;
  int player = -1;
  int dominated = -1;
  std::optional<int> pure_dominator;
  std::optional<MixedAction> mixed_dominator;
  std::vector<OppProfile> restriction;
  // For the subset-quantified kind: one weak dominator per subset.
  std::vector<std::pair<std::vector<OppProfile>, int>> subset_dominators;
};

// Re-checks a witness under its own kind's definition.
inline bool verify_witness(const Game& game, const DominanceWitness& w) {
  switch (w.kind) {
    case DominanceWitness::Kind::kWeakPure: {
      if (!w.pure_dominator) return false;
      bool weak = true, strict = false;
      for (const auto& opp : w.restriction) {
        const int cmp = game.payoff_vs(w.player, *w.pure_dominator, opp)
                            .compare(game.payoff_vs(w.player, w.dominated, opp));
        if (cmp < 0) weak = false;
        if (cmp > 0) strict = true;
      }
      return weak && strict;
    }
    case DominanceWitness::Kind::kStrictPure: {
      if (!w.pure_dominator) return false;
      for (const auto& opp : w.restriction)
        if (game.payoff_vs(w.player, *w.pure_dominator, opp) <=
            game.payoff_vs(w.player, w.dominated, opp))
          return false;
      return true;
    }
    case DominanceWitness::Kind::kStrictMixed: {
      if (!w.mixed_dominator) return false;
      Rational total(0);
      for (const auto& [a, weight] : w.mixed_dominator->weights) {
        if (weight <= 0 || a == w.dominated) return false;
        total += weight;
      }
      if (total != 1) return false;
      for (const auto& opp : w.restriction) {
        Rational mixed(0);
        for (const auto& [a, weight] : w.mixed_dominator->weights)
          mixed += weight * game.payoff_vs(w.player, a, opp);
        if (mixed <= game.payoff_vs(w.player, w.dominated, opp)) return false;
      }
      return true;
    }
    case DominanceWitness::Kind::kBorgers: {
      // Every enumerated subset must come with a verifying weak dominator,
      // and the subsets must exhaust the restriction's nonempty subsets.
      std::size_t expected = (std::size_t{1} << w.restriction.size()) - 1;
      if (w.subset_dominators.size() != expected) return false;
      for (const auto& [subset, d] : w.subset_dominators) {
        bool weak = true, strict = false;
        for (const auto& opp : subset) {
          const int cmp = game.payoff_vs(w.player, d, opp)
                              .compare(game.payoff_vs(w.player, w.dominated, opp));
          if (cmp < 0) weak = false;
          if (cmp > 0) strict = true;
        }
        if (!(weak && strict)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace ordinal

#endif  // ORDINAL_CRITERIA_HPP_
