#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idlogic/core/structure.hpp"

namespace idlogic {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

/// The lattice of all full_vocab-structures that extend `base`. Ordered by ⊑;
/// bottom interprets every added predicate as ∅, top as the full product.
class ExtensionLattice {
public:
    /// Throws MissingFunctionInterpretation if base leaves a function symbol of
    /// full_vocab uninterpreted, VocabularyError if base interprets symbols outside it.
    ExtensionLattice(Structure base, Vocabulary full_vocab);

    const Structure& base() const { return base_; }
    const Vocabulary& full_vocab() const { return full_vocab_; }
    /// Predicates of full_vocab that base leaves uninterpreted, in name order.
    const std::vector<Symbol>& free_predicates() const { return free_; }
    /// Total number of free ground atoms, Σ |A|^arity.
    std::size_t free_atom_count() const;

    Structure bottom() const;
    Structure top() const;
    bool contains(const Structure& s) const;

private:
    Structure base_;
    Vocabulary full_vocab_;
    std::vector<Symbol> free_;
};

Structure bottom(const ExtensionLattice& lat);
Structure top(const ExtensionLattice& lat);

/// Lazy, single-pass enumeration of a lattice. Structures come out in
/// lexicographic order over the free atoms (predicates by name, tuples
/// row-major, first atom most significant), starting at bottom.
class ExtensionStream {
public:
    ExtensionStream(const ExtensionLattice& lat, std::uint64_t budget = kDefaultEnumerationBudget);

    std::optional<Structure> next();
    std::uint64_t size() const { return total_; }

private:
    Structure base_;
    std::vector<Symbol> free_;
    std::size_t atoms_ = 0;
    std::uint64_t total_ = 0;
    std::uint64_t cursor_ = 0;
};

/// Throws BudgetExceeded (carrying the candidate count 2^k) when the lattice is too big.
ExtensionStream enumerate_extensions(const ExtensionLattice& lat,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Checks that 2^exponent candidates fit the budget; otherwise throws BudgetExceeded.
std::uint64_t checked_power_of_two(std::size_t exponent, std::uint64_t budget, const std::string& what);

}  // namespace idlogic
