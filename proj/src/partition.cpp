#include <cstdint>
#include <map>
#include <string>

#include "coalition_forge/solution.hpp"

namespace coalition_forge {

PartitionScenario::PartitionScenario(PlayerSet players, std::vector<std::vector<Atom>> partitions)
    : players_(std::move(players)), partitions_(std::move(partitions)) {
  if (partitions_.empty()) throw InvalidInput("scenario has no partitions");
  for (std::size_t p = 0; p < partitions_.size(); ++p) {
    const std::string where = "partition " + std::to_string(p + 1);
    Coalition covered;
    for (const auto& atom : partitions_[p]) {
      if (atom.members.empty()) throw InvalidInput(where + " has an empty atom");
      if (!atom.members.subset_of(players_.all())) throw InvalidInput(where + " has an atom outside N");
      if (atom.members.meets(covered)) {
        throw InvalidInput(where + ": atom {" + players_.label(atom.members) + "} overlaps another atom");
      }
      covered = covered | atom.members;
    }
    if (covered != players_.all()) {
      throw InvalidInput(where + " does not cover players {" + players_.label(players_.all() - covered) + "}");
    }
  }
}

Game partition_game(const PartitionScenario& scenario, const Guards& guards) {
  std::map<Coalition, Rational, CanonicalLess> worst;
  for (const auto& atoms : scenario.partitions()) {
    if (static_cast<int>(atoms.size()) > guards.max_enumerated_players) {
      throw GuardExceeded("partition with " + std::to_string(atoms.size()) + " atoms exceeds the limit of " +
                          std::to_string(guards.max_enumerated_players));
    }
    // Every nonempty union of atoms, valued additively.
    const std::uint64_t unions = std::uint64_t{1} << atoms.size();
    for (std::uint64_t pick = 1; pick < unions; ++pick) {
      Coalition s;
      Rational v;
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        if ((pick >> a) & 1U) {
          s = s | atoms[a].members;
          v += atoms[a].value;
        }
      }
      auto [it, inserted] = worst.try_emplace(s, v);
      if (!inserted && v < it->second) it->second = v;
    }
  }
  std::vector<Coalition> coalitions;
  std::vector<Rational> values;
  for (auto& [s, v] : worst) {
    coalitions.push_back(s);
    values.push_back(v);
  }
  return Game(CoalitionFamily(scenario.players(), std::move(coalitions)), std::move(values));
}

}  // namespace coalition_forge
