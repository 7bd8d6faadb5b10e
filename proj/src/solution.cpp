#include "coalition_forge/solution.hpp"

#include <string>

#include "coalition_forge/exactlin.hpp"
#include "coalition_forge/kernels.hpp"
#include "coalition_forge/representation.hpp"
#include "coalition_forge/structure.hpp"

namespace coalition_forge {

namespace {

void check_player_guard(const PlayerSet& players, const Guards& guards) {
  if (static_cast<int>(players.size()) > guards.max_enumerated_players) {
    throw GuardExceeded("|N| = " + std::to_string(players.size()) + " exceeds the enumeration limit of " +
                        std::to_string(guards.max_enumerated_players) + " players");
  }
}

// Unique MM-basis coefficients, or a StructuralError naming what failed.
std::vector<Rational> mm_coefficients(const Game& game, const Guards& guards) {
  const auto result = solve(mm_matrix(game.family(), guards), game.values());
  switch (result.kind) {
    case SolveResult::Kind::kUnique:
      return result.solution;
    case SolveResult::Kind::kNone:
      throw StructuralError("game is not representable: it lies outside the span of the MM-games");
    case SolveResult::Kind::kInfinite:
      break;
  }
  throw StructuralError("family lacks full span: representations of this game do not share one equitable solution");
}

// Lifts a dense mask-indexed vector onto the canonical family's order.
Game from_dense(const PlayerSet& players, const std::vector<Rational>& dense, const Guards& guards) {
  CoalitionFamily all = canonical_family(players, guards);
  std::vector<Rational> values;
  values.reserve(all.size());
  for (Coalition t : all.coalitions()) values.push_back(dense[t.mask()]);
  return Game(std::move(all), std::move(values));
}

}  // namespace

Allocation equitable_solution(const Assignment& assignment) {
  std::vector<Rational> payoffs(assignment.players().size());
  for (const auto& f : assignment.facilities()) {
    if (f.users.empty()) throw InvalidInput("facility '" + f.id + "' has an empty user-set");
    const Rational share = f.cost / Rational(f.users.size());
    for (int i : f.users.members()) payoffs[static_cast<std::size_t>(i)] += share;
  }
  return Allocation(assignment.players(), std::move(payoffs), assignment.total_cost());
}

Allocation chi(const Game& game, const Guards& guards) {
  const auto coeffs = mm_coefficients(game, guards);
  return equitable_solution(assignment_from_coefficients(game.family(), coeffs));
}

Allocation shapley(const Game& game, const Guards& guards) {
  check_player_guard(game.players(), guards);
  if (!is_canonical(game.family())) {
    throw StructuralError("the Shapley value needs every nonempty coalition of N; the family has " +
                          std::to_string(game.family().size()) + " of " +
                          std::to_string((std::size_t{1} << game.players().size()) - 1));
  }
  const int n = static_cast<int>(game.players().size());
  std::vector<Rational> dense(std::size_t{1} << n);
  for (std::size_t i = 0; i < game.size(); ++i) dense[game.family()[i].mask()] = game.values()[i];
  auto phi = kernels::shapley(dense, n);
  // Efficiency: the payoffs always sum to v(N).
  return Allocation(game.players(), std::move(phi), dense.back());
}

Game equivalent_game(const Game& game, const Guards& guards) {
  check_player_guard(game.players(), guards);
  const auto coeffs = mm_coefficients(game, guards);
  const auto dense =
      kernels::meet_extension(game.family().coalitions(), coeffs, static_cast<int>(game.players().size()));
  return from_dense(game.players(), dense, guards);
}

Game naive_zero_extension(const Game& game, const Guards& guards) {
  check_player_guard(game.players(), guards);
  std::vector<Rational> dense(std::size_t{1} << game.players().size());
  for (std::size_t i = 0; i < game.size(); ++i) dense[game.family()[i].mask()] = game.values()[i];
  return from_dense(game.players(), dense, guards);
}

// ---------------------------------------------------------------------------

Game restricted_unanimity_game(const CoalitionFamily& family, Coalition s) {
  if (!family.contains(s)) throw InvalidInput("coalition {" + family.label(s) + "} is not in the family");
  std::vector<Rational> values;
  values.reserve(family.size());
  for (Coalition t : family.coalitions()) values.emplace_back(s.subset_of(t) ? 1 : 0);
  return Game(family, std::move(values));
}

const Rational& Expansion::coefficient(Coalition s) const {
  auto i = family.index_of(s);
  if (!i) throw InvalidInput("coalition {" + family.label(s) + "} is not in the family");
  return coefficients[*i];
}

std::optional<UnanimityDecomposition> unanimity_decomposition(const Game& game, const Guards& guards) {
  const auto& family = game.family();
  if (family.size() > guards.max_matrix_dim) {
    throw GuardExceeded("family has " + std::to_string(family.size()) + " coalitions; matrix limit is " +
                        std::to_string(guards.max_matrix_dim));
  }
  const std::size_t n = family.size();
  RationalMatrix u(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (family[c].subset_of(family[r])) u.at(r, c) = 1;
    }
  }
  auto result = solve(u, game.values());
  if (!result.has_solution()) return std::nullopt;
  return UnanimityDecomposition{family, std::move(result.solution), result.kind == SolveResult::Kind::kUnique};
}

std::optional<Allocation> harsanyi_allocation(const Game& game, const Guards& guards) {
  const auto d = unanimity_decomposition(game, guards);
  if (!d) return std::nullopt;
  std::vector<Rational> payoffs(game.players().size());
  for (std::size_t k = 0; k < d->family.size(); ++k) {
    const Coalition s = d->family[k];
    const Rational share = d->coefficients[k] / Rational(s.size());
    for (int i : s.members()) payoffs[static_cast<std::size_t>(i)] += share;
  }
  return Allocation::from_payoffs(game.players(), std::move(payoffs));
}

Game dual_game(const Game& game) {
  const auto& family = game.family();
  if (!is_semi_algebra(family)) throw StructuralError("dual games need a semi-algebra");
  const Coalition all = family.grand();
  const Rational grand_value = game.value(all);
  std::vector<Rational> values;
  values.reserve(family.size());
  for (Coalition s : family.coalitions()) values.push_back(grand_value - game.value(all - s));
  return Game(family, std::move(values));
}

}  // namespace coalition_forge
