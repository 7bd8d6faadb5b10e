#ifndef COALITION_FORGE_REPRESENTATION_HPP
#define COALITION_FORGE_REPRESENTATION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coalition_forge/core.hpp"

namespace coalition_forge {

/// The game contributed by a single facility: its cost on every coalition
/// its user-set meets, zero elsewhere.
struct LocalGame {
  std::string facility_id;
  Game game;
};

/// One facility per coalition S with a nonzero MM-coefficient, users S,
/// cost c_S, id = label of S. Facilities follow canonical order.
/// Throws StructuralError when the game is outside the MM span.
Assignment minimal_representation(const Game& game, const Guards& guards = {});

/// One facility per nonzero coefficient, in family order, ids = labels.
Assignment assignment_from_coefficients(const CoalitionFamily& family, std::span<const Rational> coefficients);

/// v(S) = sum of the costs of facilities whose user-set meets S.
/// Throws InvalidInput when a user-set is not in the family, or when the
/// player sets differ.
Game induced_game(const Assignment& assignment, const CoalitionFamily& family);

std::vector<LocalGame> local_games(const Assignment& assignment, const CoalitionFamily& family);

/// Ok iff every user-set lies in the family and the induced game matches
/// value for value. Mismatches are reported in canonical order.
ValidationReport validate_representation(const Assignment& assignment, const Game& game);

struct ExpansionOptions {
  std::uint64_t seed = 0;
  /// Zero-cost facilities added with user-sets drawn from the family.
  std::size_t zero_facilities = 0;
  /// Every facility becomes 1..max_replicas replicas (uniformly drawn).
  std::size_t max_replicas = 1;
};

/// Seeded trivial expansion. Replica costs are random integers except the
/// last, which absorbs the remainder so replicas sum to the original cost.
/// Replica ids are "<id>#<j>"; added zero facilities are "zero#<j>".
Assignment trivial_expansion(const Assignment& assignment, const CoalitionFamily& family,
                             const ExpansionOptions& options);

/// Groups facilities by user-set, sums costs and drops zero totals.
Assignment reduce_to_minimal(const Assignment& assignment, const CoalitionFamily& family);

}  // namespace coalition_forge

#endif  // COALITION_FORGE_REPRESENTATION_HPP
