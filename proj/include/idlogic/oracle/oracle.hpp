#pragma once

#include <cstdint>
#include <vector>

#include "idlogic/core/lattice.hpp"
#include "idlogic/engine/engine.hpp"
#include "idlogic/ground/ground.hpp"
#include "idlogic/syntax/ast.hpp"

// Brute-force reference implementations for tests. They deliberately avoid the
// engine's operators and the pair evaluation of ground bodies so that
// agreement with the engine is evidence rather than tautology.
namespace idlogic::oracle {

/// ⊑-minimal extensions of `base` (over the defined predicates) satisfying
/// ⋀Δ, the rules read as material implications.
std::vector<Structure> minimal_models(const Definition& def, const Structure& base,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

/// Well-founded pair via iterated immediate truth and greatest unfounded sets,
/// with bodies evaluated in three-valued (Kleene) logic.
WfPair wf_unfounded(const GroundRuleSet& g, const Structure& open);

/// Extensions of `base` over the defined predicates satisfying the completion,
/// which is assembled here independently of the transform module.
std::vector<Structure> completion_models(const Definition& def, const Structure& base,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace idlogic::oracle
