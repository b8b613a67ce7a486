#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "idlogic/core/vocabulary.hpp"
#include "idlogic/syntax/ast.hpp"

namespace idlogic {

// Free symbols --------------------------------------------------------------

std::set<std::string> free_symbols(const Term& t);
std::set<std::string> free_symbols(const Formula& f);
/// Definitions bind nothing beyond each rule's universal variables.
std::set<std::string> free_symbols(const Definition& def);
/// Every identifier occurring in the formula, bound or free.
std::set<std::string> all_names(const Formula& f);
std::set<std::string> all_names(const Definition& def);

// Defined / open partition --------------------------------------------------

/// Head predicates in order of first appearance.
std::vector<std::string> defined_symbols(const Definition& def);
/// The head predicates with their arities (taken from the rule heads).
Vocabulary defined_vocabulary(const Definition& def);
/// τ minus the defined symbols. Throws FreeSymbolOutsideVocab when free(Δ) ⊄ τ.
Vocabulary open_symbols(const Definition& def, const Vocabulary& tau);

// Polarity ------------------------------------------------------------------

/// Calls `visit` for every free predicate occurrence with its polarity after
/// expanding derived connectives into ¬, ∧, ∃: the antecedent of ⇒ flips the
/// polarity and both sides of ⇔ are visited with both polarities.
void for_each_atom(const Formula& f, const std::function<void(const AtomNode&, bool positive)>& visit);

bool is_positive(const Definition& def);
bool is_non_recursive(const Definition& def);

// Rewrites ------------------------------------------------------------------

/// Capture-avoiding substitution of terms for free object variables.
Formula substitute(const Formula& f, const std::map<std::string, Term>& subst);
Term substitute(const Term& t, const std::map<std::string, Term>& subst);
/// Renames free predicate occurrences; binders that shadow a name stop the rename.
Formula rename_predicates(const Formula& f, const std::map<std::string, std::string>& renaming);
Definition rename_predicates(const Definition& def, const std::map<std::string, std::string>& renaming);

/// One rule ∀x̄ (X(x̄) ← φ_X) per defined predicate, where
/// φ_X = ⋁ᵢ ∃ȳᵢ (x̄ = t̄ᵢ ∧ φᵢ). Head positions holding a variable are
/// substituted instead of producing an equation; fresh names use the `$`
/// namespace.
Definition single_rule_form(const Definition& def);

struct RenamedDefinition {
    Definition definition;
    Vocabulary vocab;                           // τ′ = τ ∪ {X′}
    std::map<std::string, std::string> primed; // X -> X′ for every X with a negative occurrence
};

/// Replaces every negative occurrence of a defined symbol X by X′. Equivalences
/// containing defined symbols are first expanded into two implications.
RenamedDefinition rename_negatives(const Definition& def, const Vocabulary& tau);

/// ⋀Δ: each rule ∀ȳ (X(t̄) ← φ) read as the material implication ∀ȳ (φ ⇒ X(t̄)).
Formula material_conjunction(const Definition& def);

/// Structural equality up to renaming of bound symbols.
bool alpha_equal(const Formula& a, const Formula& b);

/// Picks names of the form `$<stem><n>` that do not occur in `taken`.
class FreshNames {
public:
    explicit FreshNames(std::set<std::string> taken) : taken_(std::move(taken)) {}
    std::string next(const std::string& stem);

private:
    std::set<std::string> taken_;
    std::map<std::string, int> counters_;
};

}  // namespace idlogic
