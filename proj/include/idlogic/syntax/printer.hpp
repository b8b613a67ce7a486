#pragma once

#include <string>

#include "idlogic/syntax/ast.hpp"

namespace idlogic {

// Output is re-parseable and parses back to an identical AST (given the same
// declarations), except for `$` names which the parser rejects; run
// tidy_names first when the text is meant for users.
std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(const Rule& r);
std::string to_string(const Definition& def);
std::string to_string(const Vocabulary& vocab);  // declaration lines
std::string to_string(const Theory& th);

/// Renames bound `$`-prefixed symbols (generated by transformations) to plain
/// names that clash with nothing in scope: x, y, z, ... for objects, X, Y, ...
/// for predicates, f, g, ... for functions.
Formula tidy_names(const Formula& f);
Definition tidy_names(const Definition& def);

}  // namespace idlogic
