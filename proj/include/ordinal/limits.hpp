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

#ifndef ORDINAL_LIMITS_HPP_
#define ORDINAL_LIMITS_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ordinal/game.hpp"
#include "ordinal/solvers.hpp"

namespace ordinal {

// An increasingly concave payoff-transformation family with exact rational
// arithmetic: v_r(u) = -(c - u)^r with c = 1 + (player's maximum payoff),
// affinely rescaled per player onto [0, 1]. The family is strictly
// increasing in u for every r, grows more concave with r, and converges
// pointwise to the binary indicator of "not a worst payoff".

struct ConcaveMember {
  Game transformed;
  int exponent = 1;
  std::vector<bool> degenerate;  // constant-payoff players, mapped to all 0
};

inline ConcaveMember concave_transform(const Game& game, int r) {
  if (r < 1) throw std::invalid_argument("exponent must be a positive integer");
  ConcaveMember member;
  member.exponent = r;
  member.transformed = game;
  member.degenerate.assign(game.num_players(), false);
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& u = game.payoffs[i];
    const Rational max = *std::max_element(u.begin(), u.end());
    const Rational min = *std::min_element(u.begin(), u.end());
    if (max == min) {
      member.degenerate[i] = true;
      for (auto& v : member.transformed.payoffs[i]) v = 0;
      continue;
    }
    const Rational c = max + 1;
    auto power = [&](Rational base) {
      Rational acc(1);
      for (int k = 0; k < r; ++k) acc *= base;
      return acc;
    };
    // v = -(c-u)^r has min at u = min and max -1 at u = max.
    const Rational vmin = -power(c - min);
    const Rational range = Rational(-1) - vmin;
    for (auto& v : member.transformed.payoffs[i])
      v = (-power(c - v) - vmin) / range;
  }
  return member;
}

struct LimitingGame {
  Game game;  // payoffs 0 at each player's global minima, 1 elsewhere
  std::vector<bool> degenerate;
};

inline LimitingGame limiting_game(const Game& game) {
  LimitingGame limit;
  limit.game = game;
  limit.degenerate.assign(game.num_players(), false);
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& u = game.payoffs[i];
    const Rational min = *std::min_element(u.begin(), u.end());
    const Rational max = *std::max_element(u.begin(), u.end());
    if (max == min) {
      limit.degenerate[i] = true;
      for (auto& v : limit.game.payoffs[i]) v = 0;
      continue;
    }
    for (auto& v : limit.game.payoffs[i]) v = (v == min) ? 0 : 1;
  }
  return limit;
}

// Checks that the map sending member `s` values to member `r` values
// (r > s) is increasing and concave, by exact secant-slope comparisons on
// the attained payoff points.
inline bool link_increasing_concave(const ConcaveMember& higher,
                                    const ConcaveMember& lower) {
  if (higher.exponent <= lower.exponent)
    throw std::invalid_argument("expected a strictly larger exponent");
  const Game& gr = higher.transformed;
  const Game& gs = lower.transformed;
  for (int i = 0; i < gr.num_players(); ++i) {
    if (higher.degenerate[i] || lower.degenerate[i]) continue;
    std::map<Rational, Rational> graph;  // x = v_s(u), y = v_r(u)
    for (std::size_t p = 0; p < gr.payoffs[i].size(); ++p) {
      auto [it, inserted] = graph.emplace(gs.payoffs[i][p], gr.payoffs[i][p]);
      if (!inserted && it->second != gr.payoffs[i][p]) return false;
    }
    Rational prev_x, prev_y;
    bool have_prev = false, have_slope = false;
    Rational prev_slope;
    for (const auto& [x, y] : graph) {
      if (have_prev) {
        if (y <= prev_y) return false;  // must increase
        const Rational slope = (y - prev_y) / (x - prev_x);
        if (have_slope && slope > prev_slope) return false;  // must concavify
        prev_slope = slope;
        have_slope = true;
      }
      prev_x = x;
      prev_y = y;
      have_prev = true;
    }
  }
  return true;
}

// Pointwise monotone convergence of the normalized members toward the
// limiting game, asserted on every profile along the given exponent list.
inline bool converges_to_limit(const Game& game, const std::vector<int>& rs) {
  const LimitingGame limit = limiting_game(game);
  std::vector<ConcaveMember> members;
  for (int r : rs) members.push_back(concave_transform(game, r));
  for (int i = 0; i < game.num_players(); ++i) {
    for (std::size_t p = 0; p < game.payoffs[i].size(); ++p) {
      const Rational target = limit.game.payoffs[i][p];
      Rational prev_gap(-1);
      for (const auto& member : members) {
        const Rational gap = abs(target - member.transformed.payoffs[i][p]);
        if (prev_gap >= 0 && gap > prev_gap) return false;
        prev_gap = gap;
      }
    }
  }
  return true;
}

// The convergence experiment: exact mixed-dominance fixed points along the
// exponent list, their monotonicity, containment in the admissibility
// limit, and the relations among the four limit objects.
struct ConvergenceReport {
  std::vector<int> exponents;
  std::vector<Family> mixed_fixed_points;  // TR fixed point per exponent
  bool monotone = true;
  int stabilized_at = -1;  // first index from which the sets stop changing
  Family borgers_base;     // admissibility fixed point of the base game
  bool contained_in_borgers = true;
  Family maxmin_base;          // maxmin fixed point of the base game
  Family maxmin_of_limit;      // maxmin fixed point of the limiting game
  // Inclusion matrix over {TR(last exponent), BR(base), WR(limit), WR(base)}.
  std::array<std::array<bool, 4>, 4> inclusions{};
  std::vector<std::string> violations;
};

inline ConvergenceReport convergence_experiment(const Game& game,
                                                const std::vector<int>& rs) {
  if (rs.empty()) throw std::invalid_argument("empty exponent list");
  for (std::size_t k = 1; k < rs.size(); ++k)
    if (rs[k] <= rs[k - 1])
      throw std::invalid_argument("exponent list must be strictly increasing");
  ConvergenceReport report;
  report.exponents = rs;
  for (int r : rs) {
    const ConcaveMember member = concave_transform(game, r);
    report.mixed_fixed_points.push_back(
        mixed_rationalizability(member.transformed).fixed_family());
  }
  for (std::size_t k = 1; k < rs.size(); ++k)
    if (!family_subset(report.mixed_fixed_points[k - 1],
                       report.mixed_fixed_points[k])) {
      report.monotone = false;
      report.violations.push_back(
          "fixed point shrank between exponents " + std::to_string(rs[k - 1]) +
          " and " + std::to_string(rs[k]));
    }
  report.stabilized_at = static_cast<int>(rs.size()) - 1;
  while (report.stabilized_at > 0 &&
         report.mixed_fixed_points[report.stabilized_at - 1] ==
             report.mixed_fixed_points.back())
    --report.stabilized_at;

  report.borgers_base = borgers_rationalizability(game).fixed_family();
  for (std::size_t k = 0; k < rs.size(); ++k)
    if (!family_subset(report.mixed_fixed_points[k], report.borgers_base)) {
      report.contained_in_borgers = false;
      report.violations.push_back("exponent " + std::to_string(rs[k]) +
                                  ": fixed point escapes the admissibility set");
    }

  report.maxmin_base = maxmin_rationalizability(game).fixed_family();
  report.maxmin_of_limit =
      maxmin_rationalizability(limiting_game(game).game).fixed_family();

  const std::array<const Family*, 4> sets = {
      &report.mixed_fixed_points.back(), &report.borgers_base,
      &report.maxmin_of_limit, &report.maxmin_base};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      report.inclusions[x][y] = family_subset(*sets[x], *sets[y]);
  return report;
}

}  // namespace ordinal

#endif  // ORDINAL_LIMITS_HPP_
