#include "idlogic/engine/engine.hpp"

#include <set>

#include "idlogic/error.hpp"
#include "idlogic/syntax/analysis.hpp"

namespace idlogic {

namespace {

void check_domain(const GroundRuleSet& g, const Structure& s) {
    if (!same_domain(g.base(), s)) throw DomainMismatch("structure domain differs from the grounding base");
}

// lfp of I ↦ T″(I, J). Updating in place is sound: T″ is monotone in I and the
// iteration starts below the fixpoint.
AtomValues stable_values(const GroundRuleSet& g, const AtomValues& j) {
    AtomValues i = j;
    const std::size_t d = g.atoms().defined_count();
    std::fill(i.begin(), i.begin() + static_cast<std::ptrdiff_t>(d), 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (AtomId a = 0; a < d; ++a) {
            if (!i[a] && g.eval(g.body(a), i, j)) {
                i[a] = 1;
                changed = true;
            }
        }
    }
    return i;
}

struct ValuePair {
    AtomValues lower;
    AtomValues upper;
};

ValuePair wf_values(const GroundRuleSet& g, const AtomValues& open,
                    std::vector<std::pair<AtomValues, AtomValues>>* trace) {
    const std::size_t d = g.atoms().defined_count();
    ValuePair p{open, open};
    std::fill(p.lower.begin(), p.lower.begin() + static_cast<std::ptrdiff_t>(d), 0);
    std::fill(p.upper.begin(), p.upper.begin() + static_cast<std::ptrdiff_t>(d), 1);
    if (trace) trace->emplace_back(p.lower, p.upper);
    for (;;) {
        AtomValues lower = stable_values(g, p.upper);
        AtomValues upper = stable_values(g, p.lower);
        if (lower == p.lower && upper == p.upper) return p;
        p = {std::move(lower), std::move(upper)};
        if (trace) trace->emplace_back(p.lower, p.upper);
    }
}

bool same_defined(const GroundRuleSet& g, const AtomValues& a, const AtomValues& b) {
    const auto d = static_cast<std::ptrdiff_t>(g.atoms().defined_count());
    return std::equal(a.begin(), a.begin() + d, b.begin());
}

Structure complete_with_bottom(const Definition& def, const Structure& open) {
    Structure out = open;
    for (const Symbol& s : open_predicates(def).predicates())
        if (!open.interprets(s.name)) out = out.with_relation(s.name, Relation(open.domain().size(), s.arity));
    return out;
}

GroundOptions ground_options(const EngineOptions& options) {
    GroundOptions g;
    g.atom_budget = options.atom_budget;
    return g;
}

}  // namespace

Vocabulary open_predicates(const Definition& def) {
    const std::vector<std::string> d = defined_symbols(def);
    const std::set<std::string> defined(d.begin(), d.end());
    Vocabulary out;
    for (const Rule& r : def.rules)
        for_each_atom(r.body, [&](const AtomNode& a, bool) {
            if (!defined.count(a.predicate)) out.add_predicate(a.predicate, a.args.size());
        });
    return out;
}

Structure gamma(const GroundRuleSet& g, const Structure& i) {
    check_domain(g, i);
    const AtomValues v = g.read(i);
    AtomValues out = v;
    for (AtomId a = 0; a < g.atoms().defined_count(); ++a) out[a] = g.eval(g.body(a), v, v);
    return g.write(out, i);
}

Structure t_pp(const GroundRuleSet& g, const Structure& i, const Structure& j) {
    check_domain(g, i);
    check_domain(g, j);
    const AtomValues lower = g.read(i);
    const AtomValues upper = g.read(j);
    AtomValues out = upper;
    for (AtomId a = 0; a < g.atoms().defined_count(); ++a) out[a] = g.eval(g.body(a), lower, upper);
    return g.write(out, j);
}

Structure lfp_monotone(const std::function<Structure(const Structure&)>& op, const ExtensionLattice& lat) {
    Structure x = lat.bottom();
    for (;;) {
        Structure y = op(x);
        if (y == x) return x;
        if (!leq(x, y))
            throw NonMonotoneDetected("an iteration step from below did not grow: " + x.atoms_string() + " -> " +
                                      y.atoms_string());
        x = std::move(y);
    }
}

Structure stable(const GroundRuleSet& g, const Structure& j) {
    check_domain(g, j);
    return g.write(stable_values(g, g.read(j)), j);
}

WfPair well_founded_pair(const GroundRuleSet& g, const Structure& open, bool trace) {
    check_domain(g, open);
    std::vector<std::pair<AtomValues, AtomValues>> steps;
    ValuePair p = wf_values(g, g.read_open(open), trace ? &steps : nullptr);
    WfPair out{g.write(p.lower, open), g.write(p.upper, open), p.lower == p.upper, g.defined(), {}};
    for (const auto& [lower, upper] : steps) out.trace.emplace_back(g.write(lower, open), g.write(upper, open));
    return out;
}

WfPair well_founded_pair(const Definition& def, const Structure& open, bool trace, const EngineOptions& options) {
    Structure completed = complete_with_bottom(def, open);
    GroundRuleSet g = ground_definition(def, completed, ground_options(options));
    return well_founded_pair(g, completed, trace);
}

bool is_total(const Definition& def, const Structure& open, const EngineOptions& options) {
    std::vector<Symbol> missing;
    for (const Symbol& s : open_predicates(def).predicates())
        if (!open.interprets(s.name)) missing.push_back(s);
    if (missing.empty() || options.completions == Completions::BottomOnly)
        return well_founded_pair(def, open, false, options).total;

    // Ground once with the missing predicates symbolic, then try every completion.
    GroundRuleSet g = ground_definition(def, open, ground_options(options));
    Vocabulary full = open.vocab();
    for (const Symbol& s : missing) full.add(s);
    ExtensionLattice lat(open, full);
    ExtensionStream stream = enumerate_extensions(lat, options.enumeration_budget);
    while (auto completion = stream.next()) {
        ValuePair p = wf_values(g, g.read_open(*completion), nullptr);
        if (p.lower != p.upper) return false;
    }
    return true;
}

std::variant<Structure, NotTotal> extension(const Definition& def, const Structure& open,
                                            const EngineOptions& options) {
    WfPair p = well_founded_pair(def, open, false, options);
    if (p.total) return p.lb;
    return NotTotal{std::move(p)};
}

bool satisfies_definition(const Structure& i, const GroundRuleSet& g) {
    check_domain(g, i);
    const AtomValues v = g.read(i);
    // Models are fixpoints of Γ; the cheap test rules out most candidates.
    for (AtomId a = 0; a < g.atoms().defined_count(); ++a)
        if (static_cast<bool>(v[a]) != g.eval(g.body(a), v, v)) return false;
    ValuePair p = wf_values(g, v, nullptr);
    return same_defined(g, p.lower, p.upper) && same_defined(g, p.lower, v);
}

bool satisfies_definition(const Structure& i, const Definition& def) {
    return satisfies_definition(i, ground_definition(def, i));
}

Structure inflationary_fixpoint(const Definition& def, const Structure& open) {
    Structure completed = complete_with_bottom(def, open);
    GroundRuleSet g = ground_definition(def, completed);
    AtomValues v = g.read_open(completed);
    for (bool changed = true; changed;) {
        changed = false;
        const AtomValues prev = v;
        for (AtomId a = 0; a < g.atoms().defined_count(); ++a) {
            if (!v[a] && g.eval(g.body(a), prev, prev)) {
                v[a] = 1;
                changed = true;
            }
        }
    }
    return g.write(v, completed);
}

Relation inflationary_fixpoint(const Formula& phi, const std::string& x, const std::vector<std::string>& vars,
                               const Structure& i) {
    Rule r;
    r.vars = vars;
    r.head = x;
    for (const std::string& v : vars) r.head_args.push_back(Term::var(v));
    r.body = phi;
    Definition def{{r}};
    return inflationary_fixpoint(def, i.without({x})).relation(x);
}

std::string trace_string(const WfPair& pair) {
    Vocabulary dv;
    for (const std::string& d : pair.defined) dv.add(pair.lb.vocab().at(d));
    std::string out;
    for (std::size_t k = 0; k < pair.trace.size(); ++k)
        out += "stage " + std::to_string(k) + ": I = " + restrict(pair.trace[k].first, dv).atoms_string() +
               ", J = " + restrict(pair.trace[k].second, dv).atoms_string() + "\n";
    return out;
}

}  // namespace idlogic
