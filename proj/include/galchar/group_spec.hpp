#pragma once

// Textual group specifications:
//   builtin   S<k> | A<k> | Z<k> | D<k> | Q8
//   explicit  [deg=<N>;] <gen>{,<gen>}   with each <gen> in cycle notation,
//             e.g. "deg=3; (1 2),(1 2 3)". Without deg= the degree is the
//             largest point mentioned.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "galchar/group.hpp"

namespace galchar {

struct GroupSpec {
  std::string builtin;  // empty for an explicit spec
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  bool is_builtin() const noexcept { return !builtin.empty(); }
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws ParseError with the offending offset.
GroupSpec parse_group_spec(std::string_view text);

/// Canonical text; parse_group_spec(to_string(s)) == s.
std::string to_string(const GroupSpec& spec);

FiniteGroup instantiate(const GroupSpec& spec, std::size_t element_cap = kDefaultElementCap);

}  // namespace galchar
