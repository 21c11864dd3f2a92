#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftcat/rational.hpp"

namespace liftcat {

// One term of `1/2|x> + 1/2|*>`: weight, point name (none for `*`) and the
// lifted weight from `x@r` (1 when omitted).
struct FormalTerm {
  Rational weight;
  std::optional<std::string> point;
  Rational r = 1;
};

// sum  := term ('+' term)*
// term := [rational] '|' label '>'
// label := '*' | name ['@' rational]     name := [A-Za-z0-9_]+
std::vector<FormalTerm> parse_formal_sum(const std::string& text);
std::string show_formal_sum(const std::vector<FormalTerm>& s);

}  // namespace liftcat
