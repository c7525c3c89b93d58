#ifndef POWGRAPH_DSL_HPP
#define POWGRAPH_DSL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "powgraph/group.hpp"

namespace powgraph {

// A group expression like "C6", "D4 x Q8" or "perm:(1 2 3)(4 5);(1 2)".
//
// Grammar (whitespace between tokens is ignored):
//   expr   := atom ("x" atom)*
//   atom   := "C"int | "D"int | "S"int | "A"int | "Q8" | "perm:" cycles
//   cycles := cycle-list (";" cycle-list)*      one generator per list
//   cycle-list := ("(" int+ ")")*               1-based points
//
// "D"n is the dihedral group of order 2n. Syntax errors raise ParseError
// with the offending byte offset.
struct GroupSpec {
  std::string expression;
};

// Parses and evaluates `expression`; every intermediate and final order must
// stay within `max_order` (CapacityError otherwise).
GroupTable build_group(std::string_view expression,
                       std::uint64_t max_order = kDefaultMaxOrder);

inline GroupTable build_group(const GroupSpec& spec,
                              std::uint64_t max_order = kDefaultMaxOrder) {
  return build_group(std::string_view(spec.expression), max_order);
}

}  // namespace powgraph

#endif  // POWGRAPH_DSL_HPP
