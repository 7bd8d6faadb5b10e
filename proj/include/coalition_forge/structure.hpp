#ifndef COALITION_FORGE_STRUCTURE_HPP
#define COALITION_FORGE_STRUCTURE_HPP

#include <optional>
#include <span>
#include <vector>

#include "coalition_forge/core.hpp"
#include "coalition_forge/exactlin.hpp"

namespace coalition_forge {

constexpr bool meets(Coalition s, Coalition t) { return s.meets(t); }
constexpr bool misses(Coalition s, Coalition t) { return s.misses(t); }

/// w_S: 1 on every T in the family that S meets, 0 elsewhere.
/// Throws InvalidInput if s is not in the family.
Game mm_game(const CoalitionFamily& family, Coalition s);

/// Square 0/1 matrix A in canonical order; column j is w_{family[j]}.
RationalMatrix mm_matrix(const CoalitionFamily& family, const Guards& guards = {});

/// The MM-games form a basis of R^C (decided by exact rank).
bool has_full_span(const CoalitionFamily& family, const Guards& guards = {});

bool is_semi_algebra(const CoalitionFamily& family);

/// An ordering S_1..S_l of the whole family. witnesses[k-1] is the T_k
/// that misses S_k and meets S_1..S_{k-1}, for k = 2..l. A hierarchy read
/// from outside may leave witnesses empty.
struct Hierarchy {
  std::vector<Coalition> sequence;
  std::vector<Coalition> witnesses;

  friend bool operator==(const Hierarchy&, const Hierarchy&) = default;
};

/// N first, then coalitions by descending size (canonical order inside a
/// size class), each witnessed by its complement.
/// Throws StructuralError if the family is not a semi-algebra.
Hierarchy semi_algebra_hierarchy(const CoalitionFamily& family);

/// Some hierarchy of the family, or nullopt if none exists.
std::optional<Hierarchy> find_hierarchy(const CoalitionFamily& family, const Guards& guards = {});

/// True iff h.sequence is a permutation of the family satisfying both
/// hierarchy conditions. Recorded witnesses are tried first; a missing or
/// failing witness is replaced by a search over the family.
bool validate_hierarchy(const CoalitionFamily& family, const Hierarchy& h);

/// Coefficients c with sum_S c_S w_S = v, aligned with the family's
/// canonical order (unique under full span; otherwise a particular
/// solution). nullopt when v lies outside the span of the MM-games.
std::optional<std::vector<Rational>> span_coefficients(const Game& game, const Guards& guards = {});

}  // namespace coalition_forge

#endif  // COALITION_FORGE_STRUCTURE_HPP
