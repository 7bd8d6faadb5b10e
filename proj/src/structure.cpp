#include "coalition_forge/structure.hpp"

#include <algorithm>
#include <string>

namespace coalition_forge {

namespace {

void check_matrix_guard(const CoalitionFamily& family, const Guards& guards) {
  if (family.size() > guards.max_matrix_dim) {
    throw GuardExceeded("family has " + std::to_string(family.size()) + " coalitions; matrix limit is " +
                        std::to_string(guards.max_matrix_dim));
  }
}

bool witness_ok(Coalition t, const std::vector<Coalition>& seq, std::size_t k) {
  if (!t.misses(seq[k])) return false;
  for (std::size_t j = 0; j < k; ++j) {
    if (!t.meets(seq[j])) return false;
  }
  return true;
}

// Reverse elimination with S_1 fixed: repeatedly reject a survivor X for
// which some T misses X and meets every other survivor. Rejectability only
// becomes easier as survivors disappear, so greedy order never loses a
// hierarchy that exists.
std::optional<Hierarchy> eliminate_from(const CoalitionFamily& family, std::size_t first) {
  const std::size_t n = family.size();
  std::vector<bool> alive(n, true);
  // missed[t]: survivors that T misses; missed_xor[t]: xor of their indices.
  std::vector<std::size_t> missed(n, 0);
  std::vector<std::size_t> missed_xor(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) {
      if (family[t].misses(family[s])) {
        ++missed[t];
        missed_xor[t] ^= s;
      }
    }
  }

  std::vector<Coalition> rejected;
  std::vector<Coalition> witnesses;
  for (std::size_t round = 1; round < n; ++round) {
    std::optional<std::size_t> pick;
    std::size_t pick_witness = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (missed[t] != 1) continue;
      const std::size_t x = missed_xor[t];
      if (x == first) continue;
      if (!pick || x > *pick) {
        pick = x;
        pick_witness = t;
      }
    }
    if (!pick) return std::nullopt;
    alive[*pick] = false;
    rejected.push_back(family[*pick]);
    witnesses.push_back(family[pick_witness]);
    for (std::size_t t = 0; t < n; ++t) {
      if (family[t].misses(family[*pick])) {
        --missed[t];
        missed_xor[t] ^= *pick;
      }
    }
  }

  Hierarchy h;
  h.sequence.push_back(family[first]);
  h.sequence.insert(h.sequence.end(), rejected.rbegin(), rejected.rend());
  h.witnesses.assign(witnesses.rbegin(), witnesses.rend());
  return h;
}

}  // namespace

Game mm_game(const CoalitionFamily& family, Coalition s) {
  if (!family.contains(s)) throw InvalidInput("coalition {" + family.label(s) + "} is not in the family");
  std::vector<Rational> values;
  values.reserve(family.size());
  for (Coalition t : family.coalitions()) values.emplace_back(s.meets(t) ? 1 : 0);
  return Game(family, std::move(values));
}

RationalMatrix mm_matrix(const CoalitionFamily& family, const Guards& guards) {
  check_matrix_guard(family, guards);
  const std::size_t n = family.size();
  RationalMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (family[c].meets(family[r])) a.at(r, c) = 1;
    }
  }
  return a;
}

bool has_full_span(const CoalitionFamily& family, const Guards& guards) {
  return is_invertible(mm_matrix(family, guards));
}

bool is_semi_algebra(const CoalitionFamily& family) {
  const Coalition all = family.grand();
  if (!family.contains(all)) return false;
  return std::all_of(family.coalitions().begin(), family.coalitions().end(),
                     [&](Coalition s) { return s == all || family.contains(all - s); });
}

Hierarchy semi_algebra_hierarchy(const CoalitionFamily& family) {
  if (!is_semi_algebra(family)) throw StructuralError("family is not a semi-algebra");
  const Coalition all = family.grand();
  Hierarchy h;
  h.sequence.push_back(all);
  // Canonical order is ascending by size; walk the size classes from the top
  // while keeping canonical order within each class.
  const auto& cs = family.coalitions();
  std::size_t end = cs.size();
  while (end > 0) {
    std::size_t begin = end;
    while (begin > 0 && cs[begin - 1].size() == cs[end - 1].size()) --begin;
    for (std::size_t i = begin; i < end; ++i) {
      if (cs[i] == all) continue;
      h.sequence.push_back(cs[i]);
      h.witnesses.push_back(all - cs[i]);
    }
    end = begin;
  }
  return h;
}

std::optional<Hierarchy> find_hierarchy(const CoalitionFamily& family, const Guards& guards) {
  if (is_semi_algebra(family)) return semi_algebra_hierarchy(family);
  check_matrix_guard(family, guards);
  const auto& cs = family.coalitions();
  for (std::size_t first = 0; first < cs.size(); ++first) {
    const bool meets_all = std::all_of(cs.begin(), cs.end(), [&](Coalition s) { return cs[first].meets(s); });
    if (!meets_all) continue;
    if (auto h = eliminate_from(family, first)) return h;
  }
  return std::nullopt;
}

bool validate_hierarchy(const CoalitionFamily& family, const Hierarchy& h) {
  const auto& seq = h.sequence;
  if (seq.size() != family.size()) return false;
  std::vector<bool> seen(family.size(), false);
  for (Coalition s : seq) {
    auto i = family.index_of(s);
    if (!i || seen[*i]) return false;
    seen[*i] = true;
  }
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (!seq[0].meets(seq[k])) return false;
    if (k - 1 < h.witnesses.size() && family.contains(h.witnesses[k - 1]) &&
        witness_ok(h.witnesses[k - 1], seq, k)) {
      continue;
    }
    const bool found = std::any_of(family.coalitions().begin(), family.coalitions().end(),
                                   [&](Coalition t) { return witness_ok(t, seq, k); });
    if (!found) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> span_coefficients(const Game& game, const Guards& guards) {
  const auto result = solve(mm_matrix(game.family(), guards), game.values());
  if (!result.has_solution()) return std::nullopt;
  return result.solution;
}

}  // namespace coalition_forge
