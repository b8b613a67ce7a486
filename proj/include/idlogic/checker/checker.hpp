#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "idlogic/core/lattice.hpp"
#include "idlogic/ground/ground.hpp"
#include "idlogic/syntax/ast.hpp"

namespace idlogic {

struct CheckerOptions {
    /// Candidates allowed per second-order or function quantifier.
    std::uint64_t budget = kDefaultEnumerationBudget;
};

/// The satisfaction relation I ⊨ φ for ID-formulas over finite structures.
/// Groundings of nested definitions are cached per function interpretation,
/// so reusing one Checker across many structures is much faster than calling
/// the free functions repeatedly.
class Checker {
public:
    explicit Checker(CheckerOptions options = {}) : options_(options) {}

    /// Throws FreeSymbolUninterpreted when free(φ) ⊄ vocab(I), BudgetExceeded
    /// when a quantifier has too many candidates.
    bool satisfies(const Structure& i, const Formula& phi);
    bool satisfies_theory(const Structure& i, const Theory& t);

private:
    struct CacheEntry {
        std::shared_ptr<const Definition> definition;  // keeps the key address alive
        GroundRuleSet ground;
    };

    friend class Evaluation;
    const GroundRuleSet& grounding(const std::shared_ptr<const Definition>& def, const Structure& s);

    struct FreeEntry {
        Formula formula;  // keeps the key address alive
        std::set<std::string> names;
    };

    CheckerOptions options_;
    std::map<const FormulaNode*, FreeEntry> free_cache_;
    std::map<std::pair<const Definition*, std::string>, CacheEntry> cache_;
};

bool satisfies(const Structure& i, const Formula& phi, CheckerOptions options = {});
bool satisfies_theory(const Structure& i, const Theory& t, CheckerOptions options = {});

/// Extensions of `base` over the predicates `free_preds` (arities from the
/// theory's vocabulary) that satisfy T, in lattice enumeration order.
class ModelStream {
public:
    ModelStream(const Theory& t, const Structure& base, const std::set<std::string>& free_preds,
                CheckerOptions options = {});

    std::optional<Structure> next();
    /// Number of candidate structures examined in total.
    std::uint64_t candidates() const { return stream_.size(); }

private:
    Theory theory_;
    Checker checker_;
    ExtensionStream stream_;
};

std::vector<Structure> enumerate_models(const Theory& t, const Structure& base,
                                        const std::set<std::string>& free_preds, CheckerOptions options = {});

}  // namespace idlogic
