#pragma once

#include "a1/split_bundle.hpp"

#include <string>

namespace a1 {

// Parses a bundle expression:
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := 'O' '(' int ')' | 'O' | '(' expr ')'
// '*' binds tighter than '+'; bare O abbreviates O(0). '+' is direct sum,
// '*' is tensor product. Throws ParseError with the failing byte offset.
SplitBundle parse_bundle(const std::string& text);

} // namespace a1
