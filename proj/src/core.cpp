#include "coalition_forge/core.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace coalition_forge {

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Coalition Coalition::of(std::initializer_list<int> members) {
  Coalition c;
  for (int i : members) c = c.with(i);
  return c;
}

// ---------------------------------------------------------------------------

PlayerSet::PlayerSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidInput("player set is empty");
  if (names_.size() > static_cast<std::size_t>(kMaxPlayers)) {
    throw InvalidInput("at most 64 players are supported, got " + std::to_string(names_.size()));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidInput("player name at position " + std::to_string(i) + " is empty");
    if (!index_.emplace(names_[i], i).second) throw InvalidInput("duplicate player '" + names_[i] + "'");
  }
}

std::optional<std::size_t> PlayerSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PlayerSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InvalidInput("unknown player '" + std::string(name) + "'");
}

Coalition PlayerSet::coalition(std::span<const std::string> names) const {
  Coalition c;
  for (const auto& n : names) {
    const int i = static_cast<int>(index_of(n));
    if (c.contains(i)) throw InvalidInput("player '" + n + "' listed twice in one coalition");
    c = c.with(i);
  }
  return c;
}

Coalition PlayerSet::coalition(std::initializer_list<std::string> names) const {
  return coalition(std::span<const std::string>(names.begin(), names.size()));
}

std::vector<std::string> PlayerSet::names_of(Coalition c) const {
  std::vector<std::string> out;
  for (int i : c.members()) out.push_back(names_.at(static_cast<std::size_t>(i)));
  return out;
}

std::string PlayerSet::label(Coalition c) const {
  std::string out;
  for (int i : c.members()) {
    if (!out.empty()) out += '+';
    out += names_.at(static_cast<std::size_t>(i));
  }
  return out.empty() ? "{}" : out;
}

// ---------------------------------------------------------------------------

ValidationReport validate_family(const PlayerSet& players, std::span<const Coalition> coalitions) {
  ValidationReport report;
  const Coalition all = players.all();
  auto show = [&](Coalition c) { return "{" + players.label(c & all) + "}"; };

  Coalition covered;
  std::unordered_set<Coalition::Mask> seen;
  for (Coalition c : coalitions) {
    if (c.empty()) {
      report.violations.emplace_back("empty coalition");
      continue;
    }
    if (!c.subset_of(all)) {
      report.violations.push_back("coalition " + show(c) + " references players outside N");
      continue;
    }
    if (!seen.insert(c.mask()).second) report.violations.push_back("duplicate coalition " + show(c));
    covered = covered | c;
  }
  for (int i : (all - covered).members()) {
    report.violations.push_back("player " + players.name(static_cast<std::size_t>(i)) +
                                " uncovered: not a member of any coalition");
  }
  return report;
}

std::vector<Coalition> canonical_order(std::span<const Coalition> coalitions) {
  std::vector<Coalition> out(coalitions.begin(), coalitions.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

CoalitionFamily::CoalitionFamily(PlayerSet players, std::vector<Coalition> coalitions)
    : players_(std::move(players)), coalitions_(std::move(coalitions)) {
  if (auto report = validate_family(players_, coalitions_); !report.ok()) {
    std::string msg = "invalid coalition family:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    msg.pop_back();
    throw InvalidInput(msg);
  }
  std::sort(coalitions_.begin(), coalitions_.end(), CanonicalLess{});
}

std::optional<std::size_t> CoalitionFamily::index_of(Coalition c) const {
  auto it = std::lower_bound(coalitions_.begin(), coalitions_.end(), c, CanonicalLess{});
  if (it == coalitions_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - coalitions_.begin());
}

CoalitionFamily canonical_family(const PlayerSet& players, const Guards& guards) {
  const int n = static_cast<int>(players.size());
  if (n > guards.max_enumerated_players) {
    throw GuardExceeded("enumerating all coalitions of " + std::to_string(n) + " players exceeds the limit of " +
                        std::to_string(guards.max_enumerated_players));
  }
  std::vector<Coalition> all;
  all.reserve((std::size_t{1} << n) - 1);
  for (Coalition::Mask m = 1; m < (Coalition::Mask{1} << n); ++m) all.emplace_back(m);
  return CoalitionFamily(players, std::move(all));
}

bool is_canonical(const CoalitionFamily& family) {
  const std::size_t n = family.players().size();
  return n < 63 && family.size() == (std::size_t{1} << n) - 1;
}

// ---------------------------------------------------------------------------

Game::Game(CoalitionFamily family, std::vector<Rational> values)
    : family_(std::move(family)), values_(std::move(values)) {
  if (values_.size() != family_.size()) {
    throw InvalidInput("game has " + std::to_string(values_.size()) + " values for " +
                       std::to_string(family_.size()) + " coalitions");
  }
}

Game Game::from_pairs(CoalitionFamily family, std::span<const std::pair<Coalition, Rational>> values) {
  std::vector<std::optional<Rational>> slots(family.size());
  for (const auto& [c, v] : values) {
    auto i = family.index_of(c);
    if (!i) throw InvalidInput("value given for coalition {" + family.label(c) + "} outside the family");
    if (slots[*i]) throw InvalidInput("coalition {" + family.label(c) + "} has more than one value");
    slots[*i] = v;
  }
  std::vector<Rational> out;
  out.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw InvalidInput("coalition {" + family.label(family[i]) + "} has no value");
    out.push_back(*slots[i]);
  }
  return Game(std::move(family), std::move(out));
}

Game Game::zero(CoalitionFamily family) {
  std::vector<Rational> values(family.size());
  return Game(std::move(family), std::move(values));
}

const Rational* Game::find(Coalition c) const {
  auto i = family_.index_of(c);
  return i ? &values_[*i] : nullptr;
}

Rational Game::value(Coalition c) const {
  if (c.empty()) return Rational(0);
  if (const Rational* v = find(c)) return *v;
  throw InvalidInput("coalition {" + family_.label(c) + "} is not in the family");
}

Game& Game::operator+=(const Game& o) {
  if (!(family_ == o.family_)) throw InvalidInput("cannot add games on different families");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Game& Game::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

// ---------------------------------------------------------------------------

Assignment::Assignment(PlayerSet players, std::vector<Facility> facilities)
    : players_(std::move(players)), facilities_(std::move(facilities)) {
  std::unordered_set<std::string> ids;
  for (const auto& f : facilities_) {
    if (!ids.insert(f.id).second) throw InvalidInput("duplicate facility id '" + f.id + "'");
    if (f.users.empty()) throw InvalidInput("facility '" + f.id + "' has an empty user-set");
    if (!f.users.subset_of(players_.all())) {
      throw InvalidInput("facility '" + f.id + "' has users outside N");
    }
  }
}

std::vector<std::size_t> Assignment::facilities_of(std::size_t player) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < facilities_.size(); ++k) {
    if (facilities_[k].users.contains(static_cast<int>(player))) out.push_back(k);
  }
  return out;
}

Rational Assignment::total_cost() const {
  Rational total;
  for (const auto& f : facilities_) total += f.cost;
  return total;
}

// ---------------------------------------------------------------------------

Allocation::Allocation(PlayerSet players, std::vector<Rational> payoffs, Rational total)
    : players_(std::move(players)), payoffs_(std::move(payoffs)), total_(std::move(total)) {
  if (payoffs_.size() != players_.size()) {
    throw InvalidInput("allocation has " + std::to_string(payoffs_.size()) + " payoffs for " +
                       std::to_string(players_.size()) + " players");
  }
  Rational sum;
  for (const auto& p : payoffs_) sum += p;
  if (sum != total_) {
    throw InvalidInput("allocation payoffs sum to " + sum.str() + ", declared total is " + total_.str());
  }
}

Allocation Allocation::from_payoffs(PlayerSet players, std::vector<Rational> payoffs) {
  Rational sum;
  for (const auto& p : payoffs) sum += p;
  return Allocation(std::move(players), std::move(payoffs), std::move(sum));
}

}  // namespace coalition_forge
