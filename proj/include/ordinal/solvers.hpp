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

#ifndef ORDINAL_SOLVERS_HPP_
#define ORDINAL_SOLVERS_HPP_

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ordinal/criteria.hpp"
#include "ordinal/game.hpp"

namespace ordinal {

// Iterated procedures. Each runs simultaneous per-player rounds from the
// full action sets (or the full profile set) down to a fixed point,
// recording a supporting certificate for every survivor and a
// justification for every elimination. Round sets shrink weakly and the
// last two recorded rounds are equal.

enum class SolutionConcept {
  kPoint,       // best reply to a single opponent profile (max-max)
  kMaxmin,      // worst-case best reply to some belief subset
  kBorgers,     // admissible against some belief subset
  kWishful,     // profile-level optimism with a payoff-floor condition
  kMixed,       // iterated strict dominance by mixed actions
  kStrictPure,  // iterated strict dominance by pure actions
};

inline const char* concept_tag(SolutionConcept c) {
  switch (c) {
    case SolutionConcept::kPoint: return "pr";
    case SolutionConcept::kMaxmin: return "wr";
    case SolutionConcept::kBorgers: return "br";
    case SolutionConcept::kWishful: return "yr";
    case SolutionConcept::kMixed: return "tr";
    case SolutionConcept::kStrictPure: return "iesd";
  }
  return "?";
}

inline std::optional<SolutionConcept> concept_from_tag(const std::string& tag) {
  for (SolutionConcept c :
       {SolutionConcept::kPoint, SolutionConcept::kMaxmin,
        SolutionConcept::kBorgers, SolutionConcept::kWishful,
        SolutionConcept::kMixed, SolutionConcept::kStrictPure})
    if (tag == concept_tag(c)) return c;
  return std::nullopt;
}

struct SurvivalCertificate {
  int round = 0;  // membership established for round `round` (>= 1)
  int player = -1;
  int action = -1;
  Profile profile;                      // profile-level concept only
  std::vector<OppProfile> belief;       // supporting belief (when applicable)
  std::vector<OppProfile> wt_witnesses; // per player, the witnessing opponents
  bool undominated = false;             // dominance concepts: no dominator found
};

struct EliminationRecord {
  int round = 0;  // first round at which the item is gone (>= 1)
  int player = -1;
  int action = -1;
  Profile profile;         // profile-level concept only
  int failing_player = -1; // profile-level: player with no witness
  std::optional<DominanceWitness> witness;
  bool no_supporting_belief = false;
};

struct Trace {
  SolutionConcept concept_tag_value = SolutionConcept::kPoint;
  std::vector<Family> rounds;                        // action-level concepts
  std::vector<std::vector<Profile>> profile_rounds;  // profile-level concept
  int fixed_point_round = 0;
  std::vector<SurvivalCertificate> certificates;
  std::vector<EliminationRecord> eliminations;

  bool profile_level() const { return !profile_rounds.empty(); }
  const Family& fixed_family() const { return rounds[fixed_point_round]; }
  const std::vector<Profile>& fixed_profiles() const {
    return profile_rounds[fixed_point_round];
  }
  // Round m clamped into the stabilized tail.
  const Family& family_at(int m) const {
    return rounds[std::min<std::size_t>(m, rounds.size() - 1)];
  }
  const std::vector<Profile>& profiles_at(int m) const {
    return profile_rounds[std::min<std::size_t>(m, profile_rounds.size() - 1)];
  }
};

namespace solver_detail {

inline bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

inline bool family_equal(const Family& a, const Family& b) { return a == b; }

// Per-round survivor filter shared by the action-level procedures. `keep`
// decides survival of (player, action) given the current family and either
// fills a certificate or an elimination record.
template <typename KeepFn>
Trace run_action_procedure(const Game& game, SolutionConcept tag, KeepFn keep) {
  Trace trace;
  trace.concept_tag_value = tag;
  trace.rounds.push_back(game.full_family());
  for (;;) {
    const Family& cur = trace.rounds.back();
    const int round = static_cast<int>(trace.rounds.size());
    Family next(game.num_players());
    for (int i = 0; i < game.num_players(); ++i) {
      for (int a : cur[i]) {
        SurvivalCertificate cert;
        cert.round = round;
        cert.player = i;
        cert.action = a;
        EliminationRecord elim;
        elim.round = round;
        elim.player = i;
        elim.action = a;
        if (keep(cur, i, a, &cert, &elim)) {
          next[i].push_back(a);
          trace.certificates.push_back(std::move(cert));
        } else {
          trace.eliminations.push_back(std::move(elim));
        }
      }
    }
    const bool fixed = family_equal(next, cur);
    trace.rounds.push_back(std::move(next));
    if (fixed) {
      trace.fixed_point_round = static_cast<int>(trace.rounds.size()) - 2;
      // Certificates for the duplicated round were recorded above; the
      // duplicated eliminations cannot exist at a fixed point.
      return trace;
    }
  }
}

}  // namespace solver_detail

inline bool family_subset(const Family& a, const Family& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int x : a[i])
      if (!solver_detail::contains(b[i], x)) return false;
  return true;
}

// Survival by best reply to some single opponent profile drawn from the
// previous round.
inline Trace point_rationalizability(const Game& game) {
  return solver_detail::run_action_procedure(
      game, SolutionConcept::kPoint,
      [&](const Family& cur, int i, int a, SurvivalCertificate* cert,
          EliminationRecord* elim) {
        for (const OppProfile& opp : opp_product(game, i, cur)) {
          const auto best = optimistic_best_replies(game, i, {opp});
          if (solver_detail::contains(best, a)) {
            cert->belief = {opp};
            return true;
          }
        }
        elim->no_supporting_belief = true;
        return false;
      });
}

// Survival by worst-case best reply to some nonempty subset of the previous
// round's opponent-profile product.
inline Trace maxmin_rationalizability(const Game& game) {
  return solver_detail::run_action_procedure(
      game, SolutionConcept::kMaxmin,
      [&](const Family& cur, int i, int a, SurvivalCertificate* cert,
          EliminationRecord* elim) {
        bool kept = false;
        for_each_belief_subset(
            opp_product(game, i, cur),
            [&](const std::vector<OppProfile>& subset) {
              const auto best = pessimistic_best_replies(game, i, subset);
              if (solver_detail::contains(best, a)) {
                cert->belief = subset;
                kept = true;
                return false;
              }
              return true;
            });
        if (!kept) elim->no_supporting_belief = true;
        return kept;
      });
}

// Survival by admissibility against some nonempty subset of the previous
// round's opponent-profile product. Dominators are the player's surviving
// actions.
inline Trace borgers_rationalizability(const Game& game) {
  return solver_detail::run_action_procedure(
      game, SolutionConcept::kBorgers,
      [&](const Family& cur, int i, int a, SurvivalCertificate* cert,
          EliminationRecord* elim) {
        const auto check =
            borgers_dominated(game, i, a, opp_product(game, i, cur), cur[i]);
        if (!check.dominated) {
          cert->belief = *check.admissible_subset;
          return true;
        }
        DominanceWitness w;
        w.kind = DominanceWitness::Kind::kBorgers;
        w.player = i;
        w.dominated = a;
        w.restriction = opp_product(game, i, cur);
        w.subset_dominators = check.subset_dominators;
        elim->witness = std::move(w);
        return false;
      });
}

// Iterated strict dominance by mixtures over the player's own surviving
// actions, relative to the surviving opponent product.
inline Trace mixed_rationalizability(const Game& game) {
  return solver_detail::run_action_procedure(
      game, SolutionConcept::kMixed,
      [&](const Family& cur, int i, int a, SurvivalCertificate* cert,
          EliminationRecord* elim) {
        std::vector<int> support;
        for (int s : cur[i])
          if (s != a) support.push_back(s);
        const auto restriction = opp_product(game, i, cur);
        auto mix = strictly_dominated_mixed(game, i, a, restriction, support);
        if (!mix) {
          cert->undominated = true;
          return true;
        }
        DominanceWitness w;
        w.kind = DominanceWitness::Kind::kStrictMixed;
        w.player = i;
        w.dominated = a;
        w.mixed_dominator = std::move(mix);
        w.restriction = restriction;
        elim->witness = std::move(w);
        return false;
      });
}

// Iterated strict dominance by pure actions drawn from the surviving set.
inline Trace iesd_pure(const Game& game) {
  return solver_detail::run_action_procedure(
      game, SolutionConcept::kStrictPure,
      [&](const Family& cur, int i, int a, SurvivalCertificate* cert,
          EliminationRecord* elim) {
        const auto restriction = opp_product(game, i, cur);
        auto dom = strictly_dominated_pure(game, i, a, restriction, cur[i]);
        if (!dom) {
          cert->undominated = true;
          return true;
        }
        DominanceWitness w;
        w.kind = DominanceWitness::Kind::kStrictPure;
        w.player = i;
        w.dominated = a;
        w.pure_dominator = dom;
        w.restriction = restriction;
        elim->witness = std::move(w);
        return false;
      });
}

inline Rational best_payoff_against(const Game& game, int player,
                                    const OppProfile& opp) {
  Rational best = game.payoff_vs(player, 0, opp);
  for (int a = 1; a < game.num_actions(player); ++a) {
    const Rational& u = game.payoff_vs(player, a, opp);
    if (u > best) best = u;
  }
  return best;
}

// Profile-level procedure. A profile survives a round iff for every player
// some opponent profile (1) combines with the player's action into a
// surviving profile, (2) makes the action a best reply to it alone, and
// (3) pays at least the player's best payoff against the profile's actual
// opponents. The fixed point may be empty; emptiness is reported, not an
// error.
inline Trace wishful_thinking(const Game& game) {
  Trace trace;
  trace.concept_tag_value = SolutionConcept::kWishful;
  trace.profile_rounds.push_back(profile_product(game, game.full_family()));
  for (;;) {
    const std::vector<Profile>& cur = trace.profile_rounds.back();
    const int round = static_cast<int>(trace.profile_rounds.size());
    std::vector<Profile> next;
    for (const Profile& p : cur) {
      SurvivalCertificate cert;
      cert.round = round;
      cert.profile = p;
      bool all_players_ok = true;
      int failing = -1;
      for (int i = 0; i < game.num_players() && all_players_ok; ++i) {
        const Rational floor = best_payoff_against(game, i, game.opponents_of(i, p));
        bool found = false;
        for (const OppProfile& opp : opp_product(game, i)) {
          const Profile moved = game.combine(i, p[i], opp);
          if (!std::binary_search(cur.begin(), cur.end(), moved)) continue;
          const auto best = optimistic_best_replies(game, i, {opp});
          if (!solver_detail::contains(best, p[i])) continue;
          if (game.payoff_vs(i, p[i], opp) < floor) continue;
          cert.wt_witnesses.push_back(opp);
          found = true;
          break;
        }
        if (!found) {
          all_players_ok = false;
          failing = i;
        }
      }
      if (all_players_ok) {
        next.push_back(p);
        trace.certificates.push_back(std::move(cert));
      } else {
        EliminationRecord elim;
        elim.round = round;
        elim.profile = p;
        elim.failing_player = failing;
        elim.no_supporting_belief = true;
        trace.eliminations.push_back(std::move(elim));
      }
    }
    const bool fixed = next == cur;
    trace.profile_rounds.push_back(std::move(next));
    if (fixed) {
      trace.fixed_point_round = static_cast<int>(trace.profile_rounds.size()) - 2;
      return trace;
    }
  }
}

// Independent re-verification of a trace: round-set shape, monotonicity,
// certificates and elimination witnesses are all re-checked against the
// definitions. Returns human-readable problems; empty means the trace is
// internally consistent.
inline std::vector<std::string> verify_trace(const Game& game, const Trace& trace) {
  std::vector<std::string> problems;
  auto complain = [&](const std::string& what) { problems.push_back(what); };

  const bool profile_level = trace.profile_level();
  const std::size_t n_rounds =
      profile_level ? trace.profile_rounds.size() : trace.rounds.size();
  if (n_rounds < 2) {
    complain("trace has fewer than two rounds");
    return problems;
  }

  if (profile_level) {
    if (trace.profile_rounds[0] != profile_product(game, game.full_family()))
      complain("round 0 is not the full profile set");
    for (std::size_t m = 0; m + 1 < n_rounds; ++m)
      for (const Profile& p : trace.profile_rounds[m + 1])
        if (!std::binary_search(trace.profile_rounds[m].begin(),
                                trace.profile_rounds[m].end(), p))
          complain("profile rounds are not weakly decreasing");
    if (trace.profile_rounds[n_rounds - 1] != trace.profile_rounds[n_rounds - 2])
      complain("last two rounds differ");
  } else {
    if (trace.rounds[0] != game.full_family())
      complain("round 0 is not the full action family");
    for (std::size_t m = 0; m + 1 < n_rounds; ++m)
      if (!family_subset(trace.rounds[m + 1], trace.rounds[m]))
        complain("rounds are not weakly decreasing");
    if (trace.rounds[n_rounds - 1] != trace.rounds[n_rounds - 2])
      complain("last two rounds differ");
    for (const auto& part : trace.fixed_family())
      if (part.empty()) complain("empty fixed point for an action-level concept");
  }

  // Survivor certificates, per concept.
  for (const auto& cert : trace.certificates) {
    const int m = cert.round - 1;  // membership in round m+1 justified from round m
    if (profile_level) {
      const auto& prev = trace.profiles_at(m);
      if (cert.wt_witnesses.size() != static_cast<std::size_t>(game.num_players())) {
        complain("profile certificate lacks a witness per player");
        continue;
      }
      for (int i = 0; i < game.num_players(); ++i) {
        const OppProfile& opp = cert.wt_witnesses[i];
        const Profile moved = game.combine(i, cert.profile[i], opp);
        if (!std::binary_search(prev.begin(), prev.end(), moved))
          complain("witness profile left the surviving set");
        const auto best = optimistic_best_replies(game, i, {opp});
        if (!solver_detail::contains(best, cert.profile[i]))
          complain("witness does not make the action a best reply");
        if (game.payoff_vs(i, cert.profile[i], opp) <
            best_payoff_against(game, i, game.opponents_of(i, cert.profile)))
          complain("witness violates the payoff floor");
      }
      continue;
    }
    const Family& prev = trace.family_at(m);
    const auto prev_product = opp_product(game, cert.player, prev);
    auto inside = [&](const std::vector<OppProfile>& belief) {
      for (const auto& opp : belief)
        if (std::find(prev_product.begin(), prev_product.end(), opp) ==
            prev_product.end())
          return false;
      return true;
    };
    switch (trace.concept_tag_value) {
      case SolutionConcept::kPoint: {
        if (cert.belief.size() != 1 || !inside(cert.belief))
          complain("point certificate is not a surviving singleton");
        else if (!solver_detail::contains(
                     optimistic_best_replies(game, cert.player, cert.belief),
                     cert.action))
          complain("point certificate does not re-verify");
        break;
      }
      case SolutionConcept::kMaxmin: {
        if (cert.belief.empty() || !inside(cert.belief))
          complain("maxmin certificate is not a surviving belief");
        else if (!solver_detail::contains(
                     pessimistic_best_replies(game, cert.player, cert.belief),
                     cert.action))
          complain("maxmin certificate does not re-verify");
        break;
      }
      case SolutionConcept::kBorgers: {
        if (cert.belief.empty() || !inside(cert.belief))
          complain("admissibility certificate is not a surviving belief");
        else if (weakly_dominated(game, cert.player, cert.action, cert.belief,
                                  prev[cert.player]))
          complain("admissibility certificate does not re-verify");
        break;
      }
      case SolutionConcept::kMixed: {
        std::vector<int> support;
        for (int s : prev[cert.player])
          if (s != cert.action) support.push_back(s);
        if (strictly_dominated_mixed(game, cert.player, cert.action,
                                     prev_product, support))
          complain("mixed-undominated certificate does not re-verify");
        break;
      }
      case SolutionConcept::kStrictPure: {
        if (strictly_dominated_pure(game, cert.player, cert.action, prev_product,
                                    prev[cert.player]))
          complain("pure-undominated certificate does not re-verify");
        break;
      }
      case SolutionConcept::kWishful:
        break;  // handled above
    }
  }

  for (const auto& elim : trace.eliminations) {
    if (elim.witness && !verify_witness(game, *elim.witness))
      complain("elimination witness does not re-verify");
    if (!elim.witness && !elim.no_supporting_belief)
      complain("elimination carries no justification");
  }
  return problems;
}

inline Trace solve(const Game& game, SolutionConcept c) {
  switch (c) {
    case SolutionConcept::kPoint: return point_rationalizability(game);
    case SolutionConcept::kMaxmin: return maxmin_rationalizability(game);
    case SolutionConcept::kBorgers: return borgers_rationalizability(game);
    case SolutionConcept::kWishful: return wishful_thinking(game);
    case SolutionConcept::kMixed: return mixed_rationalizability(game);
    case SolutionConcept::kStrictPure: return iesd_pure(game);
  }
  throw std::logic_error("unknown concept");
}

// Cross-concept inclusion report. The five action-level concepts are
// compared pairwise per round; the profile-level concept is compared
// against the point procedure's product. Claimed inclusions that fail are
// artifact defects, reported in `violations`.
struct RelationReport {
  static constexpr std::array<SolutionConcept, 5> kActionConcepts = {
      SolutionConcept::kPoint, SolutionConcept::kMaxmin,
      SolutionConcept::kBorgers, SolutionConcept::kMixed,
      SolutionConcept::kStrictPure};

  int horizon = 0;
  bool generic = false;
  std::vector<std::array<std::array<bool, 5>, 5>> inclusion;  // [round][x][y]
  std::vector<bool> wishful_in_point;
  struct Witness {
    int round = 0;
    int from = 0, to = 0;  // indices into kActionConcepts
    int player = -1, action = -1;
  };
  std::vector<Witness> noninclusion_witnesses;
  std::vector<std::string> violations;
  std::vector<Trace> traces;  // five action traces then the profile trace
};

inline RelationReport relations(const Game& game) {
  RelationReport report;
  report.generic = is_generic(game).overall;
  for (SolutionConcept c : RelationReport::kActionConcepts)
    report.traces.push_back(solve(game, c));
  report.traces.push_back(wishful_thinking(game));
  const Trace& wt = report.traces.back();

  std::size_t horizon = wt.profile_rounds.size();
  for (int x = 0; x < 5; ++x)
    horizon = std::max(horizon, report.traces[x].rounds.size());
  report.horizon = static_cast<int>(horizon);

  for (int m = 0; m < report.horizon; ++m) {
    std::array<std::array<bool, 5>, 5> cell{};
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        const Family& fx = report.traces[x].family_at(m);
        const Family& fy = report.traces[y].family_at(m);
        cell[x][y] = family_subset(fx, fy);
        if (x != y && !cell[x][y]) {
          for (std::size_t i = 0; i < fx.size(); ++i)
            for (int a : fx[i])
              if (!solver_detail::contains(fy[i], a)) {
                report.noninclusion_witnesses.push_back(
                    {m, x, y, static_cast<int>(i), a});
                i = fx.size() - 1;
                break;
              }
        }
      }
    report.inclusion.push_back(cell);

    bool wt_in_point = true;
    const Family& pr = report.traces[0].family_at(m);
    for (const Profile& p : wt.profiles_at(m))
      for (int i = 0; i < game.num_players() && wt_in_point; ++i)
        if (!solver_detail::contains(pr[i], p[i])) wt_in_point = false;
    report.wishful_in_point.push_back(wt_in_point);

    // Claimed inclusions: indices 0=point 1=maxmin 2=subset-admissible
    // 3=mixed 4=strict-pure.
    auto claim = [&](int x, int y, const char* label) {
      if (!cell[x][y])
        report.violations.push_back("round " + std::to_string(m) +
                                    ": expected inclusion failed: " + label);
    };
    claim(0, 1, "pr within wr");
    claim(0, 2, "pr within br");
    claim(3, 2, "tr within br");
    if (report.generic) claim(1, 2, "wr within br (generic)");
    if (!wt_in_point)
      report.violations.push_back("round " + std::to_string(m) +
                                  ": expected inclusion failed: yr within pr");
  }
  return report;
}

}  // namespace ordinal

#endif  // ORDINAL_SOLVERS_HPP_
