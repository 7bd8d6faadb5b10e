#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "coalition_forge/solution.hpp"

namespace coalition_forge {

namespace {

void check_player(const Game& game, std::size_t i) {
  if (i >= game.players().size()) throw std::invalid_argument("player index " + std::to_string(i) + " out of range");
}

// Largest total value over partitions of `rest` into members of the family,
// memoized on the remaining set. nullopt when no such partition exists.
class PartitionMax {
 public:
  explicit PartitionMax(const Game& game) : game_(game) {}

  std::optional<Rational> best(Coalition rest) {
    if (rest.empty()) return Rational(0);
    if (auto it = memo_.find(rest.mask()); it != memo_.end()) return it->second;
    std::optional<Rational> out;
    const int anchor = rest.lowest();
    const auto& family = game_.family();
    for (std::size_t k = 0; k < family.size(); ++k) {
      const Coalition block = family[k];
      if (!block.contains(anchor) || !block.subset_of(rest)) continue;
      auto tail = best(rest - block);
      if (!tail) continue;
      Rational total = game_.values()[k] + *tail;
      if (!out || total > *out) out = std::move(total);
    }
    memo_.emplace(rest.mask(), out);
    return out;
  }

 private:
  const Game& game_;
  std::unordered_map<Coalition::Mask, std::optional<Rational>> memo_;
};

}  // namespace

bool is_symmetric(const Game& game, std::size_t i, std::size_t j) {
  check_player(game, i);
  check_player(game, j);
  if (i == j) throw std::invalid_argument("symmetry needs two distinct players");
  const int a = static_cast<int>(i);
  const int b = static_cast<int>(j);
  const auto& family = game.family();
  for (std::size_t k = 0; k < family.size(); ++k) {
    const Coalition s = family[k];
    if (s.contains(a) == s.contains(b)) continue;
    const Coalition swapped = s.contains(a) ? s.without(a).with(b) : s.without(b).with(a);
    const Rational* other = game.find(swapped);
    if (other == nullptr || *other != game.values()[k]) return false;
  }
  return true;
}

bool is_dummy(const Game& game, std::size_t i) {
  check_player(game, i);
  const int p = static_cast<int>(i);
  const auto& family = game.family();
  if (const Rational* alone = game.find(Coalition::singleton(p)); alone != nullptr && !alone->is_zero()) {
    return false;
  }
  for (std::size_t k = 0; k < family.size(); ++k) {
    const Coalition s = family[k];
    if (s.contains(p)) {
      const Coalition rest = s.without(p);
      if (rest.empty()) continue;
      const Rational* v = game.find(rest);
      if (v == nullptr || *v != game.values()[k]) return false;
    } else if (!family.contains(s.with(p))) {
      return false;
    }
  }
  return true;
}

bool is_superadditive(const Game& game, const Guards& guards) {
  const auto& cs = game.family().coalitions();
  const int widest = cs.empty() ? 0 : cs.back().size();
  if (widest > guards.max_enumerated_players) {
    throw GuardExceeded("partition enumeration over coalitions of size " + std::to_string(widest) +
                        " exceeds the limit of " + std::to_string(guards.max_enumerated_players));
  }
  // The undivided coalition is itself a feasible partition, so the maximum
  // over all partitions equals v(S) exactly when no partition beats it.
  PartitionMax partitions(game);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (*partitions.best(cs[k]) > game.values()[k]) return false;
  }
  return true;
}

}  // namespace coalition_forge
