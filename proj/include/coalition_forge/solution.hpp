#ifndef COALITION_FORGE_SOLUTION_HPP
#define COALITION_FORGE_SOLUTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "coalition_forge/core.hpp"

namespace coalition_forge {

// ---------------------------------------------------------------------------
// Allocations

/// Splits every facility's cost equally over its full user-set.
Allocation equitable_solution(const Assignment& assignment);

/// The equitable solution of any representation of v, computed from the
/// minimal one. Requires full span: without it representations of the same
/// game can disagree. Throws StructuralError otherwise.
Allocation chi(const Game& game, const Guards& guards = {});

/// Classical Shapley value; the family must be all nonempty subsets of N.
/// Throws StructuralError for other families, GuardExceeded above the
/// player limit.
Allocation shapley(const Game& game, const Guards& guards = {});

/// The game on all nonempty subsets of N obtained by extending each MM-game
/// in v's expansion by the same meet rule. Its Shapley value equals chi(v).
Game equivalent_game(const Game& game, const Guards& guards = {});

/// v on C, zero on every other nonempty subset of N.
Game naive_zero_extension(const Game& game, const Guards& guards = {});

// ---------------------------------------------------------------------------
// Unanimity basis and duality

/// v_S restricted to the family: 1 on supersets of S, 0 elsewhere.
Game restricted_unanimity_game(const CoalitionFamily& family, Coalition s);

/// Coefficients of a game in a basis indexed by the family (canonical
/// order).
struct Expansion {
  CoalitionFamily family;
  std::vector<Rational> coefficients;
  /// Whether the basis vectors were independent (unique coefficients).
  bool unique = true;

  const Rational& coefficient(Coalition s) const;
};
using UnanimityDecomposition = Expansion;

/// Solves v = sum d_S v_S over S in C; nullopt when v is outside the span.
std::optional<UnanimityDecomposition> unanimity_decomposition(const Game& game, const Guards& guards = {});

/// Alternative allocation: each unanimity coefficient d_S split equally
/// over S. Agrees with the Shapley value on the canonical family only; it
/// is not chi.
std::optional<Allocation> harsanyi_allocation(const Game& game, const Guards& guards = {});

/// v*(S) = v(N) - v(N \ S) with v(empty) = 0. Throws StructuralError unless
/// the family is a semi-algebra.
Game dual_game(const Game& game);

// ---------------------------------------------------------------------------
// Diagnostics

/// Players i and j are interchangeable both in membership of C and in value.
/// Throws std::invalid_argument when i == j or an index is out of range.
bool is_symmetric(const Game& game, std::size_t i, std::size_t j);

/// Adding i to any coalition changes neither membership nor value, and
/// v({i}) = 0 when {i} is in C.
bool is_dummy(const Game& game, std::size_t i);

/// v(S) >= sum of v over every partition of S into members of C.
/// GuardExceeded when |N| exceeds the enumeration limit.
bool is_superadditive(const Game& game, const Guards& guards = {});

// ---------------------------------------------------------------------------
// Partition-function games

struct Atom {
  Coalition members;
  Rational value;
};

/// Feasible partitions of N with the stand-alone value of each atom.
class PartitionScenario {
 public:
  /// Throws InvalidInput unless every partition consists of disjoint
  /// nonempty atoms covering N.
  PartitionScenario(PlayerSet players, std::vector<std::vector<Atom>> partitions);

  const PlayerSet& players() const { return players_; }
  const std::vector<std::vector<Atom>>& partitions() const { return partitions_; }

 private:
  PlayerSet players_;
  std::vector<std::vector<Atom>> partitions_;
};

/// Closes every partition under unions (values additive over atoms),
/// takes the union of the resulting algebras as C, and sets v(S) to the
/// minimum over the algebras containing S.
Game partition_game(const PartitionScenario& scenario, const Guards& guards = {});

}  // namespace coalition_forge

#endif  // COALITION_FORGE_SOLUTION_HPP
