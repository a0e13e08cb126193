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

#ifndef ORDINAL_EPISTEMIC_IO_HPP_
#define ORDINAL_EPISTEMIC_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "ordinal/epistemic.hpp"
#include "ordinal/json_io.hpp"
#include "ordinal/knowledge.hpp"

namespace ordinal {

// Possibility-structure files:
//   {
//     "game": "path.json" | { inline game },
//     "types": {"a": ["t", "t'"], "b": ["s"]},
//     "pi": {"a": {"t": [["L", "s"], ["R", "s"]]}, ...}
//   }
// Each possibility entry lists the opponents' actions (in player order,
// owner skipped) followed by their types in the same order.
//
// Knowledge-structure files replace "pi" with
//   "states": [["T", "L", "t", "s"], ...]   (all actions, then all types)
//   "partitions": {"a": [[0, 1], [2]], ...} (cells of state indices)

struct StructureParse {
  bool ok = false;
  std::vector<std::string> errors;
  bool is_knowledge = false;
  PossibilityStructure possibility;
  KnowledgeStructure knowledge;
};

namespace epistemic_io_detail {

inline bool resolve_game(const Json& j, const std::string& base_dir,
                         Game* game, std::vector<std::string>* errors) {
  if (!j.contains("game")) {
    errors->push_back("missing \"game\" (path or inline object)");
    return false;
  }
  GameParse parsed;
  if (j["game"].is_string()) {
    std::filesystem::path p(j["game"].get<std::string>());
    if (p.is_relative() && !base_dir.empty())
      p = std::filesystem::path(base_dir) / p;
    parsed = load_game_file(p.string());
  } else {
    parsed = game_from_json(j["game"]);
  }
  if (!parsed.ok) {
    for (const auto& e : parsed.errors) errors->push_back("game: " + e);
    return false;
  }
  *game = std::move(parsed.game);
  return true;
}

inline bool read_types(const Json& j, const Game& game,
                       std::vector<std::vector<std::string>>* types,
                       std::vector<std::string>* errors) {
  if (!j.contains("types") || !j["types"].is_object()) {
    errors->push_back("missing \"types\" object");
    return false;
  }
  for (const auto& player : game.players) {
    if (!j["types"].contains(player) || !j["types"][player].is_array()) {
      errors->push_back("missing type list for player " + player);
      return false;
    }
    std::vector<std::string> list;
    for (const auto& t : j["types"][player]) {
      if (!t.is_string()) {
        errors->push_back("type identifiers must be strings");
        return false;
      }
      list.push_back(t.get<std::string>());
    }
    types->push_back(std::move(list));
  }
  return true;
}

inline int find_name(const std::vector<std::string>& names,
                     const std::string& name) {
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return static_cast<int>(k);
  return -1;
}

}  // namespace epistemic_io_detail

inline StructureParse structure_from_json(const Json& j,
                                          const std::string& base_dir = "") {
  StructureParse result;
  auto& errors = result.errors;
  if (!j.is_object()) {
    errors.push_back("structure file must be a JSON object");
    return result;
  }
  Game game;
  if (!epistemic_io_detail::resolve_game(j, base_dir, &game, &errors))
    return result;
  std::vector<std::vector<std::string>> types;
  if (!epistemic_io_detail::read_types(j, game, &types, &errors)) return result;
  const int n = game.num_players();

  result.is_knowledge = j.contains("states");
  if (!result.is_knowledge) {
    PossibilityStructure ps;
    ps.game = std::move(game);
    ps.types = std::move(types);
    ps.pi.resize(n);
    if (!j.contains("pi") || !j["pi"].is_object()) {
      errors.push_back("missing \"pi\" object");
      return result;
    }
    for (int i = 0; i < n; ++i) {
      const auto& player = ps.game.players[i];
      ps.pi[i].resize(ps.types[i].size());
      if (!j["pi"].contains(player)) {
        errors.push_back("missing possibility map for player " + player);
        continue;
      }
      for (std::size_t t = 0; t < ps.types[i].size(); ++t) {
        const auto& tname = ps.types[i][t];
        if (!j["pi"][player].contains(tname)) {
          errors.push_back("missing possibility image for type " + tname +
                           " of player " + player);
          continue;
        }
        for (const auto& entry : j["pi"][player][tname]) {
          if (!entry.is_array() ||
              entry.size() != static_cast<std::size_t>(2 * (n - 1))) {
            errors.push_back("possibility entry for type " + tname +
                             " must list opponent actions then types");
            continue;
          }
          OppState s;
          int k = 0;
          bool entry_ok = true;
          for (int jdx = 0; jdx < n; ++jdx) {
            if (jdx == i) continue;
            const std::string aname = entry[k].get<std::string>();
            const std::string yname = entry[n - 1 + k].get<std::string>();
            const int a = epistemic_io_detail::find_name(ps.game.actions[jdx], aname);
            const int y = epistemic_io_detail::find_name(ps.types[jdx], yname);
            if (a < 0 || y < 0) {
              errors.push_back("possibility entry for type " + tname +
                               " references unknown '" +
                               (a < 0 ? aname : yname) + "'");
              entry_ok = false;
              break;
            }
            s.actions.push_back(a);
            s.types.push_back(y);
            ++k;
          }
          if (entry_ok) ps.pi[i][t].push_back(std::move(s));
        }
        std::sort(ps.pi[i][t].begin(), ps.pi[i][t].end());
        ps.pi[i][t].erase(std::unique(ps.pi[i][t].begin(), ps.pi[i][t].end()),
                          ps.pi[i][t].end());
      }
    }
    if (errors.empty())
      for (const auto& e : ps.validate()) errors.push_back(e);
    if (!errors.empty()) return result;
    result.ok = true;
    result.possibility = std::move(ps);
    return result;
  }

  KnowledgeStructure ks;
  ks.game = std::move(game);
  ks.types = std::move(types);
  for (const auto& entry : j["states"]) {
    if (!entry.is_array() || entry.size() != static_cast<std::size_t>(2 * n)) {
      errors.push_back("each state must list all actions then all types");
      continue;
    }
    KnowledgeState s;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int a = epistemic_io_detail::find_name(ks.game.actions[i],
                                                   entry[i].get<std::string>());
      const int t = epistemic_io_detail::find_name(ks.types[i],
                                                   entry[n + i].get<std::string>());
      if (a < 0 || t < 0) {
        errors.push_back("state references an unknown action or type");
        ok = false;
        break;
      }
      s.actions.push_back(a);
      s.types.push_back(t);
    }
    if (ok) ks.states.push_back(std::move(s));
  }
  // States are kept in file order for index stability of the partitions,
  // then canonicalized.
  std::vector<int> order(ks.states.size());
  for (std::size_t s = 0; s < order.size(); ++s) order[s] = static_cast<int>(s);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return ks.states[x] < ks.states[y];
  });
  std::vector<int> rank(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = static_cast<int>(pos);
  std::sort(ks.states.begin(), ks.states.end());
  if (!j.contains("partitions") || !j["partitions"].is_object()) {
    errors.push_back("missing \"partitions\" object");
    return result;
  }
  ks.cells.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto& player = ks.game.players[i];
    if (!j["partitions"].contains(player)) {
      errors.push_back("missing partition for player " + player);
      continue;
    }
    for (const auto& cell : j["partitions"][player]) {
      StateSet set;
      for (const auto& idx : cell) {
        const int file_index = idx.get<int>();
        if (file_index < 0 || file_index >= static_cast<int>(rank.size())) {
          errors.push_back("partition cell references a missing state");
          continue;
        }
        set.push_back(rank[file_index]);
      }
      std::sort(set.begin(), set.end());
      ks.cells[i].push_back(std::move(set));
    }
  }
  ks.rebuild_cell_map();
  if (errors.empty())
    for (const auto& e : ks.validate()) errors.push_back(e);
  if (!errors.empty()) return result;
  result.ok = true;
  result.knowledge = std::move(ks);
  return result;
}

inline StructureParse load_structure_file(const std::string& path) {
  StructureParse result;
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
  return structure_from_json(
      j, std::filesystem::path(path).parent_path().string());
}

inline Json possibility_to_json(const PossibilityStructure& ps) {
  Json j;
  j["game"] = game_to_json(ps.game);
  Json types = Json::object();
  for (int i = 0; i < ps.game.num_players(); ++i)
    types[ps.game.players[i]] = ps.types[i];
  j["types"] = types;
  Json pi = Json::object();
  for (int i = 0; i < ps.game.num_players(); ++i) {
    Json per_type = Json::object();
    for (std::size_t t = 0; t < ps.types[i].size(); ++t) {
      Json entries = Json::array();
      for (const OppState& s : ps.pi[i][t]) {
        Json entry = Json::array();
        int k = 0;
        for (int jdx = 0; jdx < ps.game.num_players(); ++jdx) {
          if (jdx == i) continue;
          entry.push_back(ps.game.actions[jdx][s.actions[k]]);
          ++k;
        }
        k = 0;
        for (int jdx = 0; jdx < ps.game.num_players(); ++jdx) {
          if (jdx == i) continue;
          entry.push_back(ps.types[jdx][s.types[k]]);
          ++k;
        }
        entries.push_back(entry);
      }
      per_type[ps.types[i][t]] = entries;
    }
    pi[ps.game.players[i]] = per_type;
  }
  j["pi"] = pi;
  return j;
}

inline Json knowledge_to_json(const KnowledgeStructure& ks) {
  Json j;
  j["game"] = game_to_json(ks.game);
  Json types = Json::object();
  for (int i = 0; i < ks.game.num_players(); ++i)
    types[ks.game.players[i]] = ks.types[i];
  j["types"] = types;
  Json states = Json::array();
  for (const auto& s : ks.states) {
    Json entry = Json::array();
    for (int i = 0; i < ks.game.num_players(); ++i)
      entry.push_back(ks.game.actions[i][s.actions[i]]);
    for (int i = 0; i < ks.game.num_players(); ++i)
      entry.push_back(ks.types[i][s.types[i]]);
    states.push_back(entry);
  }
  j["states"] = states;
  Json partitions = Json::object();
  for (int i = 0; i < ks.game.num_players(); ++i) {
    Json cells = Json::array();
    for (const auto& cell : ks.cells[i]) cells.push_back(cell);
    partitions[ks.game.players[i]] = cells;
  }
  j["partitions"] = partitions;
  return j;
}

}  // namespace ordinal

#endif  // ORDINAL_EPISTEMIC_IO_HPP_
