#pragma once

#include <string_view>

#include "idlogic/syntax/ast.hpp"

namespace idlogic {

/// Parses a theory file:
///
///   pred E/1, O/1.   func s/1.   const 0.
///   { E(x) <- x = 0.  E(s(x)) <- ~O(x). }
///   !x: E(x) | O(x).
///
/// `#` starts a line comment. Inside a definition, undeclared identifiers in
/// term position become the rule's universally quantified variables.
/// Throws SyntaxError, ArityError or UndeclaredSymbol.
Theory parse_theory(std::string_view text);

/// Parses a single formula against an existing vocabulary (no declarations).
Formula parse_formula(std::string_view text, const Vocabulary& vocab);

/// Parses `{ rule. rule. ... }` against an existing vocabulary.
Definition parse_definition(std::string_view text, const Vocabulary& vocab);

}  // namespace idlogic
