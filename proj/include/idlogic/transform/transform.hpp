#pragma once

#include <map>
#include <string>
#include <vector>

#include "idlogic/core/structure.hpp"
#include "idlogic/ground/ground.hpp"
#include "idlogic/syntax/ast.hpp"

namespace idlogic {

// Partitions ---------------------------------------------------------------------

struct Partition {
    std::vector<Definition> parts;
};

/// Routes every rule to the part of its head predicate. Part indices may be any
/// numbers; parts are ordered by index. Throws UncoveredPredicate, TrivialPartition
/// (fewer than two parts) or SplitHead.
Partition make_partition(const Definition& def, const std::map<std::string, std::size_t>& grouping);

/// The conjunction Δ₁ ∧ … ∧ Δₙ as a formula.
Formula conjunction_of(const Partition& p);

enum class Certificate { Certified, Unknown };

const char* to_string(Certificate c);

struct CertificateReport {
    Certificate status = Certificate::Unknown;
    /// For Unknown: the atoms of an offending strongly connected component.
    std::vector<std::string> witness;
    std::string reason;
};

/// Checks on the ground dependency graph (open atoms symbolic) that mutually
/// dependent atoms never belong to different parts. A failure only means the
/// syntactic over-approximation could not certify the partition.
CertificateReport certify_reduction_partition(const Definition& def, const Partition& p, const Structure& base,
                                              std::size_t atom_budget = kDefaultAtomBudget);

/// Certified when the dependency graph among defined atoms is acyclic
/// (self-edges count as cycles).
CertificateReport certify_strict_reduction(const Definition& def, const Structure& base,
                                           std::size_t atom_budget = kDefaultAtomBudget);

// Translations -------------------------------------------------------------------
//
// All three return formulas whose generated names are already tidied, so they
// print and re-parse directly.

/// ⋀_X ∀x̄ (X(x̄) ⇔ φ_X).
Formula completion(const Definition& def);
/// ⋀Δ ∧ ∀X̄ (⋀Δ[P̄/X̄] ⇒ P̄ ⊆ X̄).
Formula pos_ind(const Definition& def);
/// ⋀Δ ∧ ∀X̄ ((⋀Δ[P̄/X̄] ∧ X̄ ⊆ P̄) ⇒ P̄ ⊆ X̄).
Formula circumscription(const Definition& def);

// Iterated inductive definitions ---------------------------------------------------

struct IidSequence {
    std::vector<Definition> defs;
};

struct IidCheck {
    bool valid = true;
    std::string reason;
};

/// Every part positive, defined sets pairwise disjoint, and no symbol defined
/// in Δ_i occurs open in an earlier Δ_j.
IidCheck check_iid_sequence(const IidSequence& seq);
bool check_iid(const IidSequence& seq);

/// Applies Δ₁, …, Δₙ in turn, each to the result of the previous ones.
/// Throws NotAnIidSequence with the reason when the sequence is invalid.
Structure iterated_extension(const IidSequence& seq, const Structure& open);

}  // namespace idlogic
