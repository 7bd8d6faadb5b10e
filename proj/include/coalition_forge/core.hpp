#ifndef COALITION_FORGE_CORE_HPP
#define COALITION_FORGE_CORE_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coalition_forge/rational.hpp"

namespace coalition_forge {

// ---------------------------------------------------------------------------
// Errors

/// Input that violates a domain invariant (duplicate coalition, uncovered
/// player, unknown name, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed input on which the requested construction does not exist:
/// no full span, not representable, not a semi-algebra, not canonical.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A desk-scale limit was hit before any work was attempted.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Desk-scale limits. Operations that enumerate every nonempty subset of N
/// refuse |N| > max_enumerated_players; matrix operations refuse
/// |C| > max_matrix_dim.
struct Guards {
  int max_enumerated_players = 20;
  std::size_t max_matrix_dim = 4096;
};

inline constexpr int kMaxPlayers = 64;

// ---------------------------------------------------------------------------
// Coalition

/// Bitset over player indices. The empty value exists only as an
/// intermediate; families and facilities reject it.
class Coalition {
 public:
  using Mask = std::uint64_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask mask) : mask_(mask) {}

  static Coalition of(std::initializer_list<int> members);
  static constexpr Coalition singleton(int i) { return Coalition(Mask{1} << i); }
  /// {0, ..., n-1}
  static constexpr Coalition first_n(int n) {
    return Coalition(n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }
  constexpr bool meets(Coalition o) const { return (mask_ & o.mask_) != 0; }
  constexpr bool misses(Coalition o) const { return !meets(o); }
  constexpr bool subset_of(Coalition o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr int lowest() const { return std::countr_zero(mask_); }

  std::vector<int> members() const;

  constexpr Coalition operator|(Coalition o) const { return Coalition(mask_ | o.mask_); }
  constexpr Coalition operator&(Coalition o) const { return Coalition(mask_ & o.mask_); }
  /// Set difference.
  constexpr Coalition operator-(Coalition o) const { return Coalition(mask_ & ~o.mask_); }
  constexpr Coalition with(int i) const { return Coalition(mask_ | (Mask{1} << i)); }
  constexpr Coalition without(int i) const { return Coalition(mask_ & ~(Mask{1} << i)); }

  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  Mask mask_ = 0;
};

/// Canonical order: ascending cardinality, ties broken lexicographically on
/// the sorted member indices.
constexpr bool canonical_less(Coalition a, Coalition b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const Coalition::Mask diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  // Below the lowest differing index both share members; whoever owns that
  // index has the smaller next element.
  return (a.mask() >> std::countr_zero(diff)) & 1U;
}

struct CanonicalLess {
  constexpr bool operator()(Coalition a, Coalition b) const { return canonical_less(a, b); }
};

// ---------------------------------------------------------------------------
// PlayerSet

class PlayerSet {
 public:
  /// Throws InvalidInput on empty list, empty/duplicate names, or more than
  /// 64 players.
  explicit PlayerSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InvalidInput for unknown names.
  std::size_t index_of(std::string_view name) const;
  Coalition all() const { return Coalition::first_n(static_cast<int>(names_.size())); }

  /// Throws InvalidInput on unknown or repeated names.
  Coalition coalition(std::span<const std::string> names) const;
  Coalition coalition(std::initializer_list<std::string> names) const;
  /// Member names in player order.
  std::vector<std::string> names_of(Coalition c) const;
  /// Member names in player order joined by '+'; also the facility id of
  /// constructed assignments.
  std::string label(Coalition c) const;

  friend bool operator==(const PlayerSet& a, const PlayerSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Families, games

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks nonemptiness, membership in N, duplicates and coverage of N.
ValidationReport validate_family(const PlayerSet& players, std::span<const Coalition> coalitions);

/// Sorted copy in canonical order.
std::vector<Coalition> canonical_order(std::span<const Coalition> coalitions);

/// A validated coalition family, stored in canonical order.
class CoalitionFamily {
 public:
  /// Throws InvalidInput listing every violation.
  CoalitionFamily(PlayerSet players, std::vector<Coalition> coalitions);

  const PlayerSet& players() const { return players_; }
  const std::vector<Coalition>& coalitions() const { return coalitions_; }
  std::size_t size() const { return coalitions_.size(); }
  Coalition operator[](std::size_t i) const { return coalitions_[i]; }
  std::optional<std::size_t> index_of(Coalition c) const;
  bool contains(Coalition c) const { return index_of(c).has_value(); }
  Coalition grand() const { return players_.all(); }
  std::string label(Coalition c) const { return players_.label(c); }

  friend bool operator==(const CoalitionFamily& a, const CoalitionFamily& b) {
    return a.players_ == b.players_ && a.coalitions_ == b.coalitions_;
  }

 private:
  PlayerSet players_;
  std::vector<Coalition> coalitions_;
};

/// All 2^|N|-1 nonempty subsets of N.
CoalitionFamily canonical_family(const PlayerSet& players, const Guards& guards = {});
bool is_canonical(const CoalitionFamily& family);

/// A vector v in R^C; values[i] belongs to family[i]. v(empty) = 0 is
/// implicit and never stored.
class Game {
 public:
  Game(CoalitionFamily family, std::vector<Rational> values);
  /// Values given per coalition in any order; every member of the family
  /// must appear exactly once.
  static Game from_pairs(CoalitionFamily family, std::span<const std::pair<Coalition, Rational>> values);
  static Game zero(CoalitionFamily family);

  const CoalitionFamily& family() const { return family_; }
  const PlayerSet& players() const { return family_.players(); }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// v(c); the empty coalition yields 0. Throws InvalidInput if c is not in
  /// the family.
  Rational value(Coalition c) const;
  const Rational* find(Coalition c) const;

  Game& operator+=(const Game& o);
  Game& operator*=(const Rational& c);
  friend Game operator+(Game a, const Game& b) { return a += b; }
  friend Game operator*(const Rational& c, Game g) { return g *= c; }
  friend bool operator==(const Game& a, const Game& b) {
    return a.family_ == b.family_ && a.values_ == b.values_;
  }

 private:
  CoalitionFamily family_;
  std::vector<Rational> values_;
};

// ---------------------------------------------------------------------------
// Assignments, allocations

struct Facility {
  std::string id;
  Coalition users;  // full user-set
  Rational cost;

  friend bool operator==(const Facility&, const Facility&) = default;
};

class Assignment {
 public:
  /// Throws InvalidInput on duplicate ids, empty user-sets, or users outside N.
  Assignment(PlayerSet players, std::vector<Facility> facilities);

  const PlayerSet& players() const { return players_; }
  const std::vector<Facility>& facilities() const { return facilities_; }
  std::size_t size() const { return facilities_.size(); }
  /// psi(n): indices of facilities used by player n.
  std::vector<std::size_t> facilities_of(std::size_t player) const;
  Rational total_cost() const;

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.players_ == b.players_ && a.facilities_ == b.facilities_;
  }

 private:
  PlayerSet players_;
  std::vector<Facility> facilities_;
};

class Allocation {
 public:
  /// Throws InvalidInput unless the payoffs sum to total.
  Allocation(PlayerSet players, std::vector<Rational> payoffs, Rational total);
  static Allocation from_payoffs(PlayerSet players, std::vector<Rational> payoffs);

  const PlayerSet& players() const { return players_; }
  const std::vector<Rational>& payoffs() const { return payoffs_; }
  const Rational& operator[](std::size_t i) const { return payoffs_.at(i); }
  const Rational& total() const { return total_; }

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.players_ == b.players_ && a.payoffs_ == b.payoffs_;
  }

 private:
  PlayerSet players_;
  std::vector<Rational> payoffs_;
  Rational total_;
};

}  // namespace coalition_forge

#endif  // COALITION_FORGE_CORE_HPP
