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

#ifndef ORDINAL_JSON_IO_HPP_
#define ORDINAL_JSON_IO_HPP_

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordinal/game.hpp"
#include "ordinal/rational.hpp"

namespace ordinal {

using Json = nlohmann::ordered_json;

// Game files are JSON objects:
//   {
//     "players": ["a", "b"],
//     "actions": {"a": ["T", "M", "D"], "b": ["L", "C", "R"]},
//     "payoffs": {"a": [[2,3,1],[4,1,4],[2,2,1]], "b": ...}
//   }
// A player's payoff array is nested row-major with that player's own action
// as the first index, followed by the remaining players in declared order.
// Entries are integers or "p/q" strings; parse/serialize round-trips are
// bit-exact.

struct GameParse {
  bool ok = false;
  Game game;
  std::vector<std::string> errors;
};

namespace detail {

inline void flatten_payoffs(const Json& node, int depth,
                            const std::vector<int>& dims,
                            const std::string& player, std::string path,
                            std::vector<Rational>* out,
                            std::vector<std::string>* errors) {
  if (depth == static_cast<int>(dims.size())) {
    std::optional<Rational> value;
    if (node.is_number_integer()) {
      value = Rational(static_cast<std::int64_t>(node.get<std::int64_t>()));
    } else if (node.is_string()) {
      value = parse_rational(node.get<std::string>());
    }
    if (!value) {
      errors->push_back("payoff of player " + player + " at " + path +
                        " is not an integer or \"p/q\" string");
      out->push_back(Rational(0));
    } else {
      out->push_back(*value);
    }
    return;
  }
  if (!node.is_array() || static_cast<int>(node.size()) != dims[depth]) {
    errors->push_back("payoff tensor of player " + player + " at " + path +
                      " must be an array of length " +
                      std::to_string(dims[depth]) +
                      " (missing or extra entries)");
    return;
  }
  for (int k = 0; k < dims[depth]; ++k)
    flatten_payoffs(node[k], depth + 1, dims, player,
                    path + "[" + std::to_string(k) + "]", out, errors);
}

}  // namespace detail

inline GameParse game_from_json(const Json& j) {
  GameParse result;
  auto& errors = result.errors;
  if (!j.is_object()) {
    errors.push_back("game file must be a JSON object");
    return result;
  }
  if (!j.contains("players") || !j["players"].is_array()) {
    errors.push_back("missing \"players\" array");
    return result;
  }
  Game g;
  for (const auto& p : j["players"]) {
    if (!p.is_string()) {
      errors.push_back("player identifiers must be strings");
      return result;
    }
    g.players.push_back(p.get<std::string>());
  }
  if (!j.contains("actions") || !j["actions"].is_object()) {
    errors.push_back("missing \"actions\" object");
    return result;
  }
  for (const auto& p : g.players) {
    if (!j["actions"].contains(p) || !j["actions"][p].is_array()) {
      errors.push_back("missing action list for player " + p);
      return result;
    }
    std::vector<std::string> list;
    for (const auto& a : j["actions"][p]) {
      if (!a.is_string()) {
        errors.push_back("action identifiers must be strings");
        return result;
      }
      list.push_back(a.get<std::string>());
    }
    g.actions.push_back(list);
  }
  auto structural = g.validate_identifiers();
  if (!j.contains("payoffs") || !j["payoffs"].is_object()) {
    errors.push_back("missing \"payoffs\" object");
  } else if (structural.empty()) {
    for (int i = 0; i < g.num_players(); ++i) {
      const auto& name = g.players[i];
      if (!j["payoffs"].contains(name)) {
        errors.push_back("missing payoff tensor for player " + name);
        g.payoffs.emplace_back();
        continue;
      }
      // Own action first, then the other players in declared order.
      std::vector<int> dims;
      dims.push_back(g.num_actions(i));
      std::vector<int> others;
      for (int jdx = 0; jdx < g.num_players(); ++jdx)
        if (jdx != i) {
          dims.push_back(g.num_actions(jdx));
          others.push_back(jdx);
        }
      std::vector<Rational> file_order;
      detail::flatten_payoffs(j["payoffs"][name], 0, dims, name, "", &file_order,
                              &errors);
      std::vector<Rational> full(g.num_profiles(), Rational(0));
      if (file_order.size() == g.num_profiles()) {
        for (std::size_t idx = 0; idx < full.size(); ++idx) {
          Profile p = g.profile_at(idx);
          std::size_t fidx = p[i];
          for (std::size_t k = 0; k < others.size(); ++k)
            fidx = fidx * g.num_actions(others[k]) + p[others[k]];
          full[idx] = file_order[fidx];
        }
      }
      g.payoffs.push_back(std::move(full));
    }
  }
  for (const auto& e : structural) errors.push_back(e);
  if (errors.empty())
    for (const auto& e : g.validate()) errors.push_back(e);
  if (!errors.empty()) return result;
  result.ok = true;
  result.game = std::move(g);
  return result;
}

inline Json rational_to_json(const Rational& r) {
  if (is_integer(r) && numerator(r) >= std::numeric_limits<std::int64_t>::min() &&
      numerator(r) <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(numerator(r)));
  return Json(rational_to_string(r));
}

inline Json game_to_json(const Game& g) {
  Json j;
  j["players"] = g.players;
  Json actions = Json::object();
  for (int i = 0; i < g.num_players(); ++i) actions[g.players[i]] = g.actions[i];
  j["actions"] = actions;
  Json payoffs = Json::object();
  for (int i = 0; i < g.num_players(); ++i) {
    std::vector<int> others;
    for (int jdx = 0; jdx < g.num_players(); ++jdx)
      if (jdx != i) others.push_back(jdx);
    // Build the nested own-first array recursively.
    std::function<Json(std::size_t, Profile&)> build =
        [&](std::size_t depth, Profile& partial) -> Json {
      if (depth == others.size() + 1)
        return rational_to_json(g.payoff(i, partial));
      Json arr = Json::array();
      const int who = depth == 0 ? i : others[depth - 1];
      for (int a = 0; a < g.num_actions(who); ++a) {
        partial[who] = a;
        arr.push_back(build(depth + 1, partial));
      }
      return arr;
    };
    Profile partial(g.num_players(), 0);
    payoffs[g.players[i]] = build(0, partial);
  }
  j["payoffs"] = payoffs;
  return j;
}

inline GameParse load_game_file(const std::string& path) {
  GameParse result;
  std::ifstream in(path);
  if (!in) {
    result.errors.push_back("cannot open " + path);
    return result;
  }
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    result.errors.push_back("malformed JSON in " + path);
    return result;
  }
  return game_from_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
}

// FNV-1a 64-bit digest used to echo input identities in run reports.
inline std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace ordinal

#endif  // ORDINAL_JSON_IO_HPP_
