#include "coalition_forge/io.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

namespace coalition_forge {

using Json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ParseError(what, line, column);
  }
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InvalidInput(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(where + ": missing field \"" + key + "\"");
  return *it;
}

const Json& array_field(const Json& obj, const char* key, const std::string& where) {
  const Json& a = field(obj, key, where);
  if (!a.is_array()) throw InvalidInput(where + "." + key + ": expected an array");
  return a;
}

std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InvalidInput(where + ": expected a string");
  return j.get<std::string>();
}

Rational rational_of(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational::parse(j.dump());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(where + ": " + e.what());
  }
  throw InvalidInput(where + ": expected a rational literal such as \"-5/3\"");
}

PlayerSet players_of(const Json& doc) {
  const Json& arr = array_field(doc, "players", "document");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arr.size(); ++i) names.push_back(string_of(arr[i], "players[" + std::to_string(i) + "]"));
  return PlayerSet(std::move(names));
}

Coalition members_of(const PlayerSet& players, const Json& arr, const std::string& where) {
  if (!arr.is_array()) throw InvalidInput(where + ": expected an array of player names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arr.size(); ++i) names.push_back(string_of(arr[i], where + "[" + std::to_string(i) + "]"));
  try {
    return players.coalition(names);
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

Json names_json(const PlayerSet& players, Coalition c) {
  Json arr = Json::array();
  for (const auto& n : players.names_of(c)) arr.push_back(n);
  return arr;
}

}  // namespace

Game parse_game(std::string_view text) {
  const Json doc = parse_json(text);
  PlayerSet players = players_of(doc);
  const Json& arr = array_field(doc, "coalitions", "document");
  std::vector<Coalition> coalitions;
  std::vector<std::pair<Coalition, Rational>> values;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "coalitions[" + std::to_string(i) + "]";
    const Coalition c = members_of(players, field(arr[i], "members", where), where + ".members");
    coalitions.push_back(c);
    values.emplace_back(c, rational_of(field(arr[i], "value", where), where + ".value"));
  }
  CoalitionFamily family(std::move(players), std::move(coalitions));
  return Game::from_pairs(std::move(family), values);
}

Assignment parse_assignment(std::string_view text) {
  const Json doc = parse_json(text);
  PlayerSet players = players_of(doc);
  const Json& arr = array_field(doc, "facilities", "document");
  std::vector<Facility> facilities;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "facilities[" + std::to_string(i) + "]";
    Facility f;
    f.id = string_of(field(arr[i], "id", where), where + ".id");
    f.users = members_of(players, field(arr[i], "users", where), where + ".users");
    f.cost = rational_of(field(arr[i], "cost", where), where + ".cost");
    facilities.push_back(std::move(f));
  }
  return Assignment(std::move(players), std::move(facilities));
}

PartitionScenario parse_scenario(std::string_view text) {
  const Json doc = parse_json(text);
  PlayerSet players = players_of(doc);
  const Json& arr = array_field(doc, "partitions", "document");
  std::vector<std::vector<Atom>> partitions;
  for (std::size_t p = 0; p < arr.size(); ++p) {
    const std::string where = "partitions[" + std::to_string(p) + "]";
    if (!arr[p].is_array()) throw InvalidInput(where + ": expected an array of atoms");
    std::vector<Atom> atoms;
    for (std::size_t a = 0; a < arr[p].size(); ++a) {
      const std::string at = where + "[" + std::to_string(a) + "]";
      const Json& atom = arr[p][a];
      atoms.push_back(Atom{members_of(players, field(atom, "members", at), at + ".members"),
                           rational_of(field(atom, "value", at), at + ".value")});
    }
    partitions.push_back(std::move(atoms));
  }
  return PartitionScenario(std::move(players), std::move(partitions));
}

std::string serialize_game(const Game& game) {
  Json doc;
  doc["players"] = game.players().names();
  Json arr = Json::array();
  for (std::size_t i = 0; i < game.size(); ++i) {
    Json c;
    c["members"] = names_json(game.players(), game.family()[i]);
    c["value"] = game.values()[i].str();
    arr.push_back(std::move(c));
  }
  doc["coalitions"] = std::move(arr);
  return doc.dump();
}

std::string serialize_assignment(const Assignment& assignment) {
  Json doc;
  doc["players"] = assignment.players().names();
  Json arr = Json::array();
  for (const auto& f : assignment.facilities()) {
    Json j;
    j["id"] = f.id;
    j["users"] = names_json(assignment.players(), f.users);
    j["cost"] = f.cost.str();
    arr.push_back(std::move(j));
  }
  doc["facilities"] = std::move(arr);
  return doc.dump();
}

std::string serialize_allocation(const Allocation& allocation) {
  Json doc = Json::object();
  for (std::size_t i = 0; i < allocation.payoffs().size(); ++i) {
    const std::string& name = allocation.players().name(i);
    if (name == "total") throw InvalidInput("a player named \"total\" collides with the allocation total key");
    doc[name] = allocation[i].str();
  }
  doc["total"] = allocation.total().str();
  return doc.dump();
}

}  // namespace coalition_forge
