#include "idlogic/transform/transform.hpp"

#include <set>

#include "idlogic/engine/engine.hpp"
#include "idlogic/error.hpp"
#include "idlogic/syntax/analysis.hpp"
#include "idlogic/syntax/printer.hpp"

namespace idlogic {

Partition make_partition(const Definition& def, const std::map<std::string, std::size_t>& grouping) {
    const std::vector<std::string> defined = defined_symbols(def);
    for (const std::string& d : defined)
        if (!grouping.count(d)) throw UncoveredPredicate("'" + d + "' is not assigned to a part");
    const std::set<std::string> defined_set(defined.begin(), defined.end());
    std::map<std::size_t, Definition> parts;
    for (const auto& [pred, index] : grouping) {
        if (!defined_set.count(pred)) throw UncoveredPredicate("'" + pred + "' is not defined by the definition");
        parts[index];
    }
    if (parts.size() < 2) throw TrivialPartition("a partition needs at least two parts");
    for (const Rule& r : def.rules) parts[grouping.at(r.head)].rules.push_back(r);

    Partition out;
    std::map<std::string, std::size_t> owner;
    for (auto& [index, part] : parts) {
        for (const Rule& r : part.rules) {
            auto [it, fresh] = owner.emplace(r.head, out.parts.size());
            if (!fresh && it->second != out.parts.size())
                throw SplitHead("rules for '" + r.head + "' ended up in different parts");
        }
        out.parts.push_back(std::move(part));
    }
    return out;
}

Formula conjunction_of(const Partition& p) {
    std::vector<Formula> parts;
    for (const Definition& d : p.parts) parts.push_back(definition(d));
    return conj(parts);
}

const char* to_string(Certificate c) { return c == Certificate::Certified ? "certified" : "unknown"; }

namespace {

GroundRuleSet symbolic_grounding(const Definition& def, const Structure& base, std::size_t budget) {
    GroundOptions opts;
    opts.fold_open = false;
    opts.atom_budget = budget;
    return ground_definition(def, base, opts);
}

std::vector<std::string> names(const GroundRuleSet& g, const std::vector<AtomId>& atoms) {
    std::vector<std::string> out;
    for (AtomId a : atoms) out.push_back(g.atoms().name(a, g.base().domain()));
    return out;
}

}  // namespace

CertificateReport certify_reduction_partition(const Definition& def, const Partition& p, const Structure& base,
                                              std::size_t atom_budget) {
    std::map<std::string, std::size_t> part_of;
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (const std::string& d : defined_symbols(p.parts[i])) part_of[d] = i;

    GroundRuleSet g = symbolic_grounding(def, base, atom_budget);
    SccDecomposition scc = scc_preorder(dependency_graph(g));
    for (const auto& members : scc.members) {
        std::set<std::size_t> parts;
        for (AtomId a : members)
            if (g.atoms().is_defined(a)) parts.insert(part_of.at(g.atoms().entry_of(a).predicate));
        if (parts.size() > 1)
            return {Certificate::Unknown, names(g, members), "mutually dependent atoms lie in different parts"};
    }
    return {Certificate::Certified, {}, "no dependency cycle crosses parts"};
}

CertificateReport certify_strict_reduction(const Definition& def, const Structure& base, std::size_t atom_budget) {
    GroundRuleSet g = symbolic_grounding(def, base, atom_budget);
    SccDecomposition scc = scc_preorder(dependency_graph(g));
    for (std::size_t c = 0; c < scc.members.size(); ++c)
        if (scc.cyclic[c]) {
            const bool self = scc.members[c].size() == 1;
            return {Certificate::Unknown, names(g, scc.members[c]),
                    self ? "an atom depends on itself" : "defined atoms depend on each other cyclically"};
        }
    return {Certificate::Certified, {}, "the dependency graph is acyclic"};
}

Formula completion(const Definition& def) {
    std::vector<Formula> parts;
    for (const Rule& r : single_rule_form(def).rules)
        parts.push_back(forall(r.vars, iff(atom(r.head, r.head_args), r.body)));
    return tidy_names(conj(parts));
}

namespace {

// ∀x̄ (A(x̄) ⇒ B(x̄)) for each pair.
Formula inclusion(const std::vector<std::pair<std::string, std::string>>& pairs, const Vocabulary& arities,
                  FreshNames& fresh) {
    std::vector<Formula> parts;
    for (const auto& [a, b] : pairs) {
        std::vector<std::string> vars;
        std::vector<Term> args;
        for (std::size_t k = 0; k < arities.at(a).arity; ++k) {
            vars.push_back(fresh.next("x"));
            args.push_back(Term::var(vars.back()));
        }
        parts.push_back(forall(vars, implies(atom(a, args), atom(b, args))));
    }
    return conj(parts);
}

Formula minimality(const Definition& def, bool circumscribe) {
    const Vocabulary dv = defined_vocabulary(def);
    const Formula closed = material_conjunction(def);
    std::set<std::string> taken = all_names(def);
    FreshNames fresh(taken);

    std::map<std::string, std::string> to_x;
    std::vector<std::pair<std::string, std::string>> p_in_x, x_in_p;
    std::vector<std::string> order = defined_symbols(def);
    for (const std::string& p : order) {
        to_x[p] = fresh.next("X");
        p_in_x.emplace_back(p, to_x[p]);
        x_in_p.emplace_back(to_x[p], p);
    }
    Vocabulary arities = dv;
    for (const auto& [p, x] : to_x) arities.add_predicate(x, dv.at(p).arity);

    Formula antecedent = rename_predicates(closed, to_x);
    if (circumscribe) antecedent = conj(antecedent, inclusion(x_in_p, arities, fresh));
    Formula body = implies(antecedent, inclusion(p_in_x, arities, fresh));
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        body = quantify(Quantifier::Forall, BinderKind::Predicate, to_x[*it], dv.at(*it).arity, body);
    return tidy_names(conj(closed, body));
}

}  // namespace

Formula pos_ind(const Definition& def) { return minimality(def, false); }

Formula circumscription(const Definition& def) { return minimality(def, true); }

IidCheck check_iid_sequence(const IidSequence& seq) {
    std::vector<std::set<std::string>> defined;
    for (std::size_t i = 0; i < seq.defs.size(); ++i) {
        const Definition& d = seq.defs[i];
        if (d.rules.empty()) return {false, "part " + std::to_string(i + 1) + " has no rules"};
        if (!is_positive(d)) return {false, "part " + std::to_string(i + 1) + " is not positive"};
        std::vector<std::string> heads = defined_symbols(d);
        defined.emplace_back(heads.begin(), heads.end());
        for (std::size_t j = 0; j < i; ++j)
            for (const std::string& h : heads)
                if (defined[j].count(h))
                    return {false, "'" + h + "' is defined in parts " + std::to_string(j + 1) + " and " +
                                       std::to_string(i + 1)};
    }
    for (std::size_t j = 0; j < seq.defs.size(); ++j) {
        for (const std::string& s : free_symbols(seq.defs[j])) {
            if (defined[j].count(s)) continue;
            for (std::size_t i = j + 1; i < seq.defs.size(); ++i)
                if (defined[i].count(s))
                    return {false, "'" + s + "' occurs open in part " + std::to_string(j + 1) +
                                       " but is defined in the later part " + std::to_string(i + 1)};
        }
    }
    return {true, ""};
}

bool check_iid(const IidSequence& seq) { return check_iid_sequence(seq).valid; }

Structure iterated_extension(const IidSequence& seq, const Structure& open) {
    IidCheck check = check_iid_sequence(seq);
    if (!check.valid) throw NotAnIidSequence(check.reason);
    Structure cur = open;
    for (const Definition& d : seq.defs) {
        auto result = extension(d, cur);
        // Positive definitions are total, so this branch is unreachable.
        if (std::holds_alternative<NotTotal>(result)) throw NotAnIidSequence("a part is not total");
        cur = std::get<Structure>(result);
    }
    return cur;
}

}  // namespace idlogic
