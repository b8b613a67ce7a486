#include "idlogic/oracle/oracle.hpp"

#include <algorithm>

#include "idlogic/checker/checker.hpp"
#include "idlogic/syntax/analysis.hpp"

namespace idlogic::oracle {

namespace {

std::vector<Structure> models_of(const Formula& phi, const Definition& def, const Structure& base,
                                 std::uint64_t budget) {
    const Vocabulary dv = defined_vocabulary(def);
    std::vector<std::string> defined;
    for (const Symbol& s : dv.symbols()) defined.push_back(s.name);
    Structure b = base.without(defined);
    ExtensionStream stream = enumerate_extensions(ExtensionLattice(b, b.vocab().united(dv)), budget);
    Checker checker;
    std::vector<Structure> out;
    while (auto s = stream.next())
        if (checker.satisfies(*s, phi)) out.push_back(std::move(*s));
    return out;
}

enum Truth : std::uint8_t { kFalse = 0, kUndef = 1, kTrue = 2 };

struct ThreeValued {
    std::vector<Truth> defined;  // per defined atom
    AtomValues open;
};

// Kleene evaluation; `leaf` decides the value of each atom occurrence.
template <typename Leaf>
Truth kleene(const GroundRuleSet& g, NodeId id, const Leaf& leaf) {
    const GroundNode& n = g.node(id);
    switch (n.kind) {
        case NodeKind::True: return kTrue;
        case NodeKind::False: return kFalse;
        case NodeKind::Atom: return leaf(n);
        case NodeKind::Not: return static_cast<Truth>(2 - kleene(g, g.child(n, 0), leaf));
        case NodeKind::And: {
            Truth v = kTrue;
            for (std::uint32_t i = 0; i < n.count && v != kFalse; ++i) v = std::min(v, kleene(g, g.child(n, i), leaf));
            return v;
        }
        case NodeKind::Or: {
            Truth v = kFalse;
            for (std::uint32_t i = 0; i < n.count && v != kTrue; ++i) v = std::max(v, kleene(g, g.child(n, i), leaf));
            return v;
        }
    }
    return kUndef;
}

}  // namespace

std::vector<Structure> minimal_models(const Definition& def, const Structure& base, std::uint64_t budget) {
    std::vector<Structure> closed = models_of(material_conjunction(def), def, base, budget);
    std::vector<Structure> out;
    for (const Structure& m : closed) {
        bool minimal = true;
        for (const Structure& other : closed)
            if (!(other == m) && leq(other, m)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(m);
    }
    return out;
}

WfPair wf_unfounded(const GroundRuleSet& g, const Structure& open) {
    const std::size_t d = g.atoms().defined_count();
    ThreeValued state{std::vector<Truth>(d, kUndef), g.read_open(open)};

    auto value = [&](const GroundNode& n) -> Truth {
        if (n.atom >= d) return state.open[n.atom] ? kTrue : kFalse;
        return state.defined[n.atom];
    };

    for (;;) {
        // Immediate truth: bodies true in the current three-valued interpretation.
        std::vector<char> derived(d, 0);
        for (AtomId a = 0; a < d; ++a) derived[a] = kleene(g, g.body(a), value) == kTrue;

        // Greatest unfounded set = complement of the atoms with possible support,
        // where positive occurrences must themselves be supported.
        std::vector<char> supported(d, 0);
        auto support_leaf = [&](const GroundNode& n) -> Truth {
            if (n.atom >= d) return state.open[n.atom] ? kTrue : kFalse;
            if (n.positive && !supported[n.atom]) return kFalse;
            return state.defined[n.atom];
        };
        for (bool changed = true; changed;) {
            changed = false;
            for (AtomId a = 0; a < d; ++a)
                if (!supported[a] && kleene(g, g.body(a), support_leaf) != kFalse) {
                    supported[a] = 1;
                    changed = true;
                }
        }

        std::vector<Truth> next(d, kUndef);
        for (AtomId a = 0; a < d; ++a) {
            if (derived[a]) next[a] = kTrue;
            else if (!supported[a]) next[a] = kFalse;
        }
        if (next == state.defined) break;
        state.defined = std::move(next);
    }

    AtomValues lower = state.open;
    AtomValues upper = state.open;
    bool total = true;
    for (AtomId a = 0; a < d; ++a) {
        lower[a] = state.defined[a] == kTrue;
        upper[a] = state.defined[a] != kFalse;
        total = total && state.defined[a] != kUndef;
    }
    return WfPair{g.write(lower, open), g.write(upper, open), total, g.defined(), {}};
}

std::vector<Structure> completion_models(const Definition& def, const Structure& base, std::uint64_t budget) {
    std::vector<Formula> parts;
    for (const Rule& r : single_rule_form(def).rules)
        parts.push_back(forall(r.vars, iff(atom(r.head, r.head_args), r.body)));
    return models_of(conj(parts), def, base, budget);
}

}  // namespace idlogic::oracle
