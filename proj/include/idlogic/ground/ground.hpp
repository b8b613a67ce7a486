#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idlogic/core/structure.hpp"
#include "idlogic/syntax/ast.hpp"

namespace idlogic {

inline constexpr std::size_t kDefaultAtomBudget = 200000;

using AtomId = std::uint32_t;
using NodeId = std::uint32_t;

/// Dense numbering of the domain atoms a ground rule set talks about: the atoms
/// of the defined predicates first, then those of the open predicates that were
/// left symbolic.
class AtomTable {
public:
    struct Entry {
        std::string predicate;
        std::size_t arity = 0;
        AtomId offset = 0;
        bool defined = false;
    };

    AtomTable() = default;
    AtomTable(std::size_t domain_size, std::vector<Entry> predicates);

    std::size_t size() const { return size_; }
    std::size_t defined_count() const { return defined_count_; }
    bool is_defined(AtomId id) const { return id < defined_count_; }

    const std::vector<Entry>& predicates() const { return preds_; }
    const Entry* find(const std::string& predicate) const;
    std::optional<AtomId> id(const std::string& predicate, const Tuple& args) const;
    GroundAtom atom(AtomId id) const;
    const Entry& entry_of(AtomId id) const;
    /// "P[a,b]" using the domain's element names.
    std::string name(AtomId id, const Domain& domain) const;

private:
    std::size_t domain_size_ = 0;
    std::vector<Entry> preds_;
    std::size_t size_ = 0;
    std::size_t defined_count_ = 0;
};

enum class NodeKind : std::uint8_t { True, False, Atom, Not, And, Or };

/// Node of a quantifier-free ground body. Atom leaves carry the polarity of the
/// occurrence (positive under an even number of negations).
struct GroundNode {
    NodeKind kind = NodeKind::True;
    bool positive = true;
    AtomId atom = 0;
    std::uint32_t first = 0;  // children live in GroundRuleSet::children()[first, first+count)
    std::uint32_t count = 0;
};

/// Truth values indexed by AtomId.
using AtomValues = std::vector<char>;

/// A definition compiled over a fixed domain and function interpretation:
/// one boolean body per defined atom.
class GroundRuleSet {
public:
    const Structure& base() const { return base_; }
    const AtomTable& atoms() const { return atoms_; }
    const std::vector<std::string>& defined() const { return defined_; }
    /// Open predicates whose atoms are leaves (not folded into constants).
    std::vector<std::string> symbolic_open() const;

    NodeId body(AtomId defined_atom) const { return bodies_.at(defined_atom); }
    const GroundNode& node(NodeId id) const { return nodes_[id]; }
    NodeId child(const GroundNode& n, std::uint32_t i) const { return children_[n.first + i]; }
    std::size_t node_count() const { return nodes_.size(); }

    /// Positive defined leaves read `lower`; negative defined leaves and all
    /// open leaves read `upper`. With lower == upper this is plain evaluation.
    bool eval(NodeId id, const AtomValues& lower, const AtomValues& upper) const;

    /// Atom values of a structure that interprets every predicate in the table.
    AtomValues read(const Structure& s) const;
    /// Open atoms read from `s`; defined atoms false.
    AtomValues read_open(const Structure& s) const;
    /// `source` with the defined predicates replaced by the given values.
    Structure write(const AtomValues& values, const Structure& source) const;

    /// `P[a,b] := <body>` per defined atom, `+`/`-` marking defined leaves.
    std::string dump() const;
    std::string body_string(NodeId id) const;

private:
    friend class Grounder;
    AtomValues read_atoms(const Structure& s, bool with_defined) const;

    Structure base_{Domain::range(1)};
    AtomTable atoms_;
    std::vector<std::string> defined_;
    std::vector<GroundNode> nodes_;
    std::vector<NodeId> children_;
    std::vector<NodeId> bodies_;
};

struct GroundOptions {
    /// Fold atoms of open predicates that `base` interprets into True/False.
    bool fold_open = true;
    std::size_t atom_budget = kDefaultAtomBudget;
};

/// Grounds Δ over `base`, which must interpret every function symbol occurring
/// in Δ. Throws MissingFunctionInterpretation or DomainTooLarge.
GroundRuleSet ground_definition(const Definition& def, const Structure& base, const GroundOptions& options = {});

/// Throw DomainMismatch when I (or J) lives on another domain than the base.
bool eval_body(const GroundRuleSet& g, const GroundAtom& head, const Structure& i);
bool eval_body_pair(const GroundRuleSet& g, const GroundAtom& head, const Structure& i, const Structure& j);

// Dependency graph -------------------------------------------------------------

struct DependencyEdge {
    AtomId from = 0;  // a leaf of the body of `to`
    AtomId to = 0;
    bool positive = true;

    friend auto operator<=>(const DependencyEdge&, const DependencyEdge&) = default;
};

class DependencyGraph {
public:
    DependencyGraph(std::size_t atom_count, std::vector<DependencyEdge> edges);

    std::size_t atom_count() const { return successors_.size(); }
    const std::vector<DependencyEdge>& edges() const { return edges_; }
    const std::vector<AtomId>& successors(AtomId a) const { return successors_[a]; }
    bool has_self_edge(AtomId a) const;

private:
    std::vector<DependencyEdge> edges_;  // sorted, unique
    std::vector<std::vector<AtomId>> successors_;
};

DependencyGraph dependency_graph(const GroundRuleSet& g);

struct SccDecomposition {
    std::vector<std::size_t> component;       // scc id per atom
    std::vector<std::vector<AtomId>> members;  // per scc, ascending atom ids
    std::vector<bool> cyclic;                  // ≥ 2 atoms or a self-edge
    std::vector<std::size_t> order;            // scc ids, dependencies before dependants
};

SccDecomposition scc_preorder(const DependencyGraph& dg);

/// One `from -> to [+|-]` line per edge, atoms named as in AtomTable::name.
std::string edge_list(const DependencyGraph& dg, const GroundRuleSet& g);

}  // namespace idlogic
