#include "coalition_forge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "coalition_forge/io.hpp"
#include "coalition_forge/representation.hpp"
#include "coalition_forge/solution.hpp"
#include "coalition_forge/structure.hpp"

namespace coalition_forge {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Guards guards_from_env() {
  Guards g;
  if (const char* v = std::getenv("COALITION_FORGE_GUARD_N"); v != nullptr && *v != '\0') {
    try {
      std::size_t used = 0;
      const int n = std::stoi(v, &used);
      if (used != std::string(v).size() || n < 1 || n > 62) throw std::invalid_argument("range");
      g.max_enumerated_players = n;
    } catch (const std::exception&) {
      throw InputError(std::string("COALITION_FORGE_GUARD_N must be an integer in [1, 62], got '") + v + "'");
    }
  }
  return g;
}

Json coalition_json(const PlayerSet& players, Coalition c) {
  Json arr = Json::array();
  for (const auto& n : players.names_of(c)) arr.push_back(n);
  return arr;
}

int cmd_check(const Game& game, const Guards& guards, std::ostream& out, std::ostream& err) {
  const auto& family = game.family();
  const bool semi = is_semi_algebra(family);
  const bool span = has_full_span(family, guards);
  const auto hierarchy = find_hierarchy(family, guards);

  Json doc;
  doc["players"] = family.players().size();
  doc["coalitions"] = family.size();
  doc["semi_algebra"] = semi;
  doc["full_span"] = span;
  std::string hierarchy_text = "none";
  if (hierarchy) {
    Json seq = Json::array();
    Json wit = Json::array();
    hierarchy_text.clear();
    for (Coalition s : hierarchy->sequence) {
      seq.push_back(coalition_json(family.players(), s));
      hierarchy_text += (hierarchy_text.empty() ? "" : ", ") + family.label(s);
    }
    for (Coalition t : hierarchy->witnesses) wit.push_back(coalition_json(family.players(), t));
    doc["hierarchy"] = {{"sequence", std::move(seq)}, {"witnesses", std::move(wit)}};
  } else {
    doc["hierarchy"] = nullptr;
  }
  out << doc.dump() << '\n';
  err << "semi-algebra: " << (semi ? "yes" : "no") << "; full span: " << (span ? "yes" : "no")
      << "; hierarchy: " << hierarchy_text << '\n';
  return span ? kExitOk : kExitStructural;
}

int cmd_validate(const Game& game, const Assignment& assignment, std::ostream& out, std::ostream& err) {
  const auto report = validate_representation(assignment, game);
  Json doc;
  doc["ok"] = report.ok();
  doc["violations"] = report.violations;
  out << doc.dump() << '\n';
  for (const auto& v : report.violations) err << v << '\n';
  return report.ok() ? kExitOk : kExitStructural;
}

int cmd_analyze(const Game& game, const Guards& guards, std::ostream& out) {
  const auto& players = game.players();
  Json pairs = Json::array();
  for (std::size_t i = 0; i < players.size(); ++i) {
    for (std::size_t j = i + 1; j < players.size(); ++j) {
      if (is_symmetric(game, i, j)) pairs.push_back(Json::array({players.name(i), players.name(j)}));
    }
  }
  Json dummies = Json::array();
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (is_dummy(game, i)) dummies.push_back(players.name(i));
  }
  Json doc;
  doc["symmetric_pairs"] = std::move(pairs);
  doc["dummies"] = std::move(dummies);
  doc["superadditive"] = is_superadditive(game, guards);
  out << doc.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equitable cost allocation for cooperative games on restricted coalition families"};
  app.name(args.empty() ? "coalition_forge" : args[0]);
  app.require_subcommand(1);

  std::string game_path;
  std::string assignment_path;
  std::string scenario_path;
  std::string family_game_path;
  ExpansionOptions expansion{0, 1, 3};

  std::function<int(const Guards&)> action;
  auto game_command = [&](const char* name, const char* help, auto body) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("game", game_path, "game document (JSON)")->required();
    sub->callback([&, body] {
      action = [&, body](const Guards& guards) { return body(parse_game(read_file(game_path)), guards); };
    });
    return sub;
  };

  game_command("check", "classify the family: semi-algebra, hierarchy, full span",
               [&](const Game& g, const Guards& guards) { return cmd_check(g, guards, out, err); });
  game_command("represent", "print the minimal facility representation", [&](const Game& g, const Guards& guards) {
    out << serialize_assignment(minimal_representation(g, guards)) << '\n';
    return int{kExitOk};
  });
  game_command("solve", "print the equitable solution", [&](const Game& g, const Guards& guards) {
    out << serialize_allocation(chi(g, guards)) << '\n';
    return int{kExitOk};
  });
  game_command("shapley", "print the Shapley value (all coalitions must be present)",
               [&](const Game& g, const Guards& guards) {
                 out << serialize_allocation(shapley(g, guards)) << '\n';
                 return int{kExitOk};
               });
  game_command("extend", "print the equivalent game on all coalitions", [&](const Game& g, const Guards& guards) {
    out << serialize_game(equivalent_game(g, guards)) << '\n';
    return int{kExitOk};
  });
  game_command("analyze", "list symmetric pairs, dummies and superadditivity",
               [&](const Game& g, const Guards& guards) { return cmd_analyze(g, guards, out); });
  game_command("harsanyi", "print the equal-split allocation of unanimity coefficients",
               [&](const Game& g, const Guards& guards) {
                 const auto a = harsanyi_allocation(g, guards);
                 if (!a) {
                   err << "game lies outside the span of the restricted unanimity games\n";
                   return int{kExitStructural};
                 }
                 out << serialize_allocation(*a) << '\n';
                 return int{kExitOk};
               });
  game_command("dual", "print the dual game (semi-algebras only)", [&](const Game& g, const Guards&) {
    out << serialize_game(dual_game(g)) << '\n';
    return int{kExitOk};
  });

  auto* validate = app.add_subcommand("validate", "check that an assignment represents a game");
  validate->add_option("game", game_path, "game document (JSON)")->required();
  validate->add_option("assignment", assignment_path, "assignment document (JSON)")->required();
  validate->callback([&] {
    action = [&](const Guards&) {
      return cmd_validate(parse_game(read_file(game_path)), parse_assignment(read_file(assignment_path)), out, err);
    };
  });

  auto* gen = app.add_subcommand("gen-partition", "build the game of a partition-function scenario");
  gen->add_option("scenario", scenario_path, "scenario document (JSON)")->required();
  gen->callback([&] {
    action = [&](const Guards& guards) {
      out << serialize_game(partition_game(parse_scenario(read_file(scenario_path)), guards)) << '\n';
      return int{kExitOk};
    };
  });

  auto* expand = app.add_subcommand("expand", "print a seeded trivial expansion of an assignment");
  expand->add_option("assignment", assignment_path, "assignment document (JSON)")->required();
  expand->add_option("--seed", expansion.seed, "random seed")->required();
  expand->add_option("--zero-facilities", expansion.zero_facilities, "zero-cost facilities to add")
      ->capture_default_str();
  expand->add_option("--max-replicas", expansion.max_replicas, "maximum replicas per facility")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  expand->add_option("--family", family_game_path,
                     "game whose family supplies user-sets for added facilities (default: the assignment's user-sets)");
  expand->callback([&] {
    action = [&](const Guards&) {
      const Assignment assignment = parse_assignment(read_file(assignment_path));
      std::optional<CoalitionFamily> family;
      if (!family_game_path.empty()) {
        family = parse_game(read_file(family_game_path)).family();
      } else {
        std::vector<Coalition> sets;
        for (const auto& f : assignment.facilities()) {
          if (std::find(sets.begin(), sets.end(), f.users) == sets.end()) sets.push_back(f.users);
        }
        family.emplace(assignment.players(), std::move(sets));
      }
      out << serialize_assignment(trivial_expansion(assignment, *family, expansion)) << '\n';
      return int{kExitOk};
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << "\n\n" << app.help();
    return kExitParse;
  }

  try {
    return action(guards_from_env());
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitStructural;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitStructural;
  }
}

}  // namespace coalition_forge
