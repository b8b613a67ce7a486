#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "idlogic/core/lattice.hpp"
#include "idlogic/ground/ground.hpp"

namespace idlogic {

/// Immediate consequence operator Γ_Δ: open symbols from I, each defined atom
/// re-derived from its body evaluated in I.
Structure gamma(const GroundRuleSet& g, const Structure& i);

/// T″_Δ(I, J): positive defined occurrences read I, negative ones and open
/// symbols read J.
Structure t_pp(const GroundRuleSet& g, const Structure& i, const Structure& j);

/// Least fixpoint of a monotone operator on a finite lattice, iterated from
/// bottom. Throws NonMonotoneDetected when a step is observed to shrink.
Structure lfp_monotone(const std::function<Structure(const Structure&)>& op, const ExtensionLattice& lat);

/// ST_Δ(J) = lfp of I ↦ T″_Δ(I, J) among the extensions of J's open part.
Structure stable(const GroundRuleSet& g, const Structure& j);

struct WfPair {
    Structure lb;
    Structure ub;
    bool total = false;
    std::vector<std::string> defined;
    /// (I^ξ, J^ξ) for ξ = 0, 1, ... until the pair repeats; empty unless requested.
    std::vector<std::pair<Structure, Structure>> trace;
};

/// Alternating fixpoint from (⊥, ⊤): I^ξ = ST(J^{ξ-1}), J^ξ = ST(I^{ξ-1}).
/// `open` supplies the symbolic open predicates of g; defined predicates it may
/// interpret are ignored. lb and ub are `open` with the defined predicates set.
WfPair well_founded_pair(const GroundRuleSet& g, const Structure& open, bool trace = false);

/// How totality treats open predicates missing from the given structure.
enum class Completions {
    All,         // total in every completion (enumerated, budget-guarded)
    BottomOnly,  // only the completion interpreting them as ∅
};

struct EngineOptions {
    Completions completions = Completions::All;
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    std::size_t atom_budget = kDefaultAtomBudget;
};

/// The well-founded pair of Δ in `open`, grounding on the way. Open predicates
/// `open` leaves uninterpreted are completed with ∅.
WfPair well_founded_pair(const Definition& def, const Structure& open, bool trace = false,
                         const EngineOptions& options = {});

bool is_total(const Definition& def, const Structure& open, const EngineOptions& options = {});

struct NotTotal {
    WfPair pair;
};

/// The Δ-extension (lb = ub) or the diagnostic pair. Missing open predicates are
/// completed with ∅.
std::variant<Structure, NotTotal> extension(const Definition& def, const Structure& open,
                                            const EngineOptions& options = {});

/// I ⊨ Δ: Δ is total in I's open part and I is its extension.
bool satisfies_definition(const Structure& i, const Definition& def);
/// Same, on a grounding whose symbolic atoms I interprets.
bool satisfies_definition(const Structure& i, const GroundRuleSet& g);

/// Inflationary iteration R ↦ R ∪ {x̄ | I[X:R] ⊨ φ[x̄]} from ∅.
Relation inflationary_fixpoint(const Formula& phi, const std::string& x, const std::vector<std::string>& vars,
                               const Structure& i);
/// Same for every defined predicate of Δ at once: S ↦ S ∪ Γ_Δ(S).
Structure inflationary_fixpoint(const Definition& def, const Structure& open);

/// Open predicates of Δ (free predicate symbols that are not defined), with arities.
Vocabulary open_predicates(const Definition& def);

/// `stage k: I = {…}, J = {…}` lines.
std::string trace_string(const WfPair& pair);

}  // namespace idlogic
