#ifndef COALITION_FORGE_IO_HPP
#define COALITION_FORGE_IO_HPP

// JSON documents. Rationals travel as strings ("-18", "-5/3"); plain JSON
// integers are accepted on input. Player order in a document is
// authoritative and preserved in every output.
//
//   game:        {"players": [..], "coalitions": [{"members": [..], "value": ".."}, ..]}
//   assignment:  {"players": [..], "facilities": [{"id": "..", "users": [..], "cost": ".."}, ..]}
//   scenario:    {"players": [..], "partitions": [[{"members": [..], "value": ".."}, ..], ..]}
//   allocation:  {"<player>": "..", .., "total": ".."}

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coalition_forge/core.hpp"
#include "coalition_forge/solution.hpp"

namespace coalition_forge {

/// Malformed JSON. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Syntax problems throw ParseError; well-formed JSON that violates a domain
// invariant (unknown player, duplicate coalition, malformed rational, ...)
// throws InvalidInput naming the offending field.
Game parse_game(std::string_view text);
Assignment parse_assignment(std::string_view text);
PartitionScenario parse_scenario(std::string_view text);

std::string serialize_game(const Game& game);
std::string serialize_assignment(const Assignment& assignment);
/// A player literally named "total" would collide with the total key; such
/// allocations throw InvalidInput.
std::string serialize_allocation(const Allocation& allocation);

}  // namespace coalition_forge

#endif  // COALITION_FORGE_IO_HPP
