#pragma once

#include <string>

#include "smithles/fgab.hpp"

namespace smithles::fgab {

// Group-expression grammar (ASCII, whitespace insignificant):
//   group := "0" | term ("+" term)*
//   term  := "Z" | "Z/" posint
// "Z/0" and "Z/1" are rejected. The printer is FgAbGroup::to_string(),
// which emits canonical form with invariant factors ascending.
FgAbGroup parse_group(const std::string& text);

std::string print_group(const FgAbGroup& g);

}  // namespace smithles::fgab
