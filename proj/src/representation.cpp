#include "coalition_forge/representation.hpp"

#include <map>
#include <random>

#include "coalition_forge/structure.hpp"

namespace coalition_forge {

namespace {

void check_measurable(const Assignment& assignment, const CoalitionFamily& family) {
  if (!(assignment.players() == family.players())) {
    throw InvalidInput("assignment and family have different player sets");
  }
  for (const auto& f : assignment.facilities()) {
    if (!family.contains(f.users)) {
      throw InvalidInput("measurability violation: facility '" + f.id + "' has user-set {" +
                         family.label(f.users) + "} outside the family");
    }
  }
}

}  // namespace

Assignment minimal_representation(const Game& game, const Guards& guards) {
  const auto coeffs = span_coefficients(game, guards);
  if (!coeffs) throw StructuralError("game is not representable: it lies outside the span of the MM-games");
  return assignment_from_coefficients(game.family(), *coeffs);
}

Assignment assignment_from_coefficients(const CoalitionFamily& family, std::span<const Rational> coefficients) {
  if (coefficients.size() != family.size()) throw InvalidInput("one coefficient per coalition is required");
  std::vector<Facility> facilities;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    facilities.push_back(Facility{family.label(family[i]), family[i], coefficients[i]});
  }
  return Assignment(family.players(), std::move(facilities));
}

Game induced_game(const Assignment& assignment, const CoalitionFamily& family) {
  check_measurable(assignment, family);
  std::vector<Rational> values(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto& f : assignment.facilities()) {
      if (f.users.meets(family[i])) values[i] += f.cost;
    }
  }
  return Game(family, std::move(values));
}

std::vector<LocalGame> local_games(const Assignment& assignment, const CoalitionFamily& family) {
  check_measurable(assignment, family);
  std::vector<LocalGame> out;
  out.reserve(assignment.size());
  for (const auto& f : assignment.facilities()) {
    std::vector<Rational> values;
    values.reserve(family.size());
    for (Coalition t : family.coalitions()) values.push_back(f.users.meets(t) ? f.cost : Rational(0));
    out.push_back(LocalGame{f.id, Game(family, std::move(values))});
  }
  return out;
}

ValidationReport validate_representation(const Assignment& assignment, const Game& game) {
  ValidationReport report;
  const auto& family = game.family();
  if (!(assignment.players() == family.players())) {
    report.violations.emplace_back("assignment and game have different player sets");
    return report;
  }
  for (const auto& f : assignment.facilities()) {
    if (!family.contains(f.users)) {
      report.violations.push_back("measurability violation: facility '" + f.id + "' has user-set {" +
                                  family.label(f.users) + "} outside the family");
    }
  }
  if (!report.ok()) return report;
  const Game induced = induced_game(assignment, family);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (induced.values()[i] != game.values()[i]) {
      report.violations.push_back("mismatch at {" + family.label(family[i]) + "}: " + induced.values()[i].str() +
                                  " != " + game.values()[i].str());
    }
  }
  return report;
}

Assignment trivial_expansion(const Assignment& assignment, const CoalitionFamily& family,
                             const ExpansionOptions& options) {
  check_measurable(assignment, family);
  std::mt19937_64 rng(options.seed);
  std::vector<Facility> enlarged = assignment.facilities();
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  for (std::size_t j = 0; j < options.zero_facilities; ++j) {
    enlarged.push_back(Facility{"zero#" + std::to_string(j), family[pick(rng)], Rational(0)});
  }

  const std::size_t max_replicas = std::max<std::size_t>(options.max_replicas, 1);
  std::uniform_int_distribution<std::size_t> replicas(1, max_replicas);
  std::uniform_int_distribution<long> share(-10, 10);
  std::vector<Facility> out;
  for (const auto& f : enlarged) {
    const std::size_t r = replicas(rng);
    if (r == 1) {
      out.push_back(f);
      continue;
    }
    Rational remaining = f.cost;
    for (std::size_t j = 0; j < r; ++j) {
      const Rational cost = j + 1 == r ? remaining : Rational(share(rng));
      remaining -= cost;
      out.push_back(Facility{f.id + "#" + std::to_string(j), f.users, cost});
    }
  }
  return Assignment(assignment.players(), std::move(out));
}

Assignment reduce_to_minimal(const Assignment& assignment, const CoalitionFamily& family) {
  check_measurable(assignment, family);
  std::map<Coalition, Rational, CanonicalLess> groups;
  for (const auto& f : assignment.facilities()) groups[f.users] += f.cost;
  std::vector<Facility> out;
  for (const auto& [users, cost] : groups) {
    if (cost.is_zero()) continue;
    out.push_back(Facility{family.label(users), users, cost});
  }
  return Assignment(assignment.players(), std::move(out));
}

}  // namespace coalition_forge
