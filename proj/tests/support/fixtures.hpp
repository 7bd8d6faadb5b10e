#ifndef COALITION_FORGE_TESTS_FIXTURES_HPP
#define COALITION_FORGE_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "coalition_forge/core.hpp"

namespace coalition_forge::testing {

inline PlayerSet players(std::vector<std::string> names) { return PlayerSet(std::move(names)); }

inline Game make_game(const PlayerSet& ps, std::vector<std::pair<std::vector<std::string>, Rational>> entries) {
  std::vector<Coalition> cs;
  std::vector<std::pair<Coalition, Rational>> values;
  for (auto& [names, v] : entries) {
    const Coalition c = ps.coalition(names);
    cs.push_back(c);
    values.emplace_back(c, v);
  }
  return Game::from_pairs(CoalitionFamily(ps, cs), values);
}

/// Five parties on a spectrum: C = {ab, bcd, de}, v = (-18, -22, -16).
inline Game spectrum_game() {
  return make_game(players({"a", "b", "c", "d", "e"}),
                   {{{"a", "b"}, -18}, {{"b", "c", "d"}, -22}, {{"d", "e"}, -16}});
}

/// Semi-algebra {1}, {23}, {123} with v = (-1, -2, -4).
inline Game triad_game() {
  return make_game(players({"1", "2", "3"}), {{{"1"}, -1}, {{"2", "3"}, -2}, {{"1", "2", "3"}, -4}});
}

/// C = {{1}, {1,2}}: both coalitions meet both, so A is all ones.
inline CoalitionFamily nospan_family() {
  const auto ps = players({"1", "2"});
  return CoalitionFamily(ps, {ps.coalition({"1"}), ps.coalition({"1", "2"})});
}

inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline std::vector<Rational> qs(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

}  // namespace coalition_forge::testing

#endif  // COALITION_FORGE_TESTS_FIXTURES_HPP
