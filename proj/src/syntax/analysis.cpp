#include "idlogic/syntax/analysis.hpp"

#include <algorithm>

#include "idlogic/error.hpp"

namespace idlogic {

namespace {

template <typename... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void collect_free(const Term& t, std::set<std::string>& out) {
    out.insert(t.name);
    for (const Term& a : t.args) collect_free(a, out);
}

void collect_all(const Term& t, std::set<std::string>& out) { collect_free(t, out); }

void collect_all(const Formula& f, std::set<std::string>& out);

void collect_all(const Definition& def, std::set<std::string>& out) {
    for (const Rule& r : def.rules) {
        out.insert(r.vars.begin(), r.vars.end());
        out.insert(r.head);
        for (const Term& t : r.head_args) collect_all(t, out);
        collect_all(r.body, out);
    }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
    std::visit(Overloaded{
                   [&](const AtomNode& n) {
                       out.insert(n.predicate);
                       for (const Term& t : n.args) collect_all(t, out);
                   },
                   [&](const EqualNode& n) {
                       collect_all(n.lhs, out);
                       collect_all(n.rhs, out);
                   },
                   [&](const TruthNode&) {},
                   [&](const NotNode& n) { collect_all(n.sub, out); },
                   [&](const BinaryNode& n) {
                       collect_all(n.lhs, out);
                       collect_all(n.rhs, out);
                   },
                   [&](const QuantNode& n) {
                       out.insert(n.name);
                       collect_all(n.body, out);
                   },
                   [&](const DefNode& n) { collect_all(*n.definition, out); },
               },
               f.node().v);
}

bool mentions(const Term& t, const std::string& name) {
    if (t.name == name) return true;
    return std::any_of(t.args.begin(), t.args.end(), [&](const Term& a) { return mentions(a, name); });
}

bool subst_mentions(const std::map<std::string, Term>& subst, const std::string& name) {
    return std::any_of(subst.begin(), subst.end(), [&](const auto& kv) { return mentions(kv.second, name); });
}

std::set<std::string> subst_names(const Formula& f, const std::map<std::string, Term>& subst) {
    std::set<std::string> taken = all_names(f);
    for (const auto& [k, t] : subst) {
        taken.insert(k);
        collect_all(t, taken);
    }
    return taken;
}

Formula substitute_impl(const Formula& f, const std::map<std::string, Term>& subst, FreshNames& fresh);

Rule substitute_rule(const Rule& rule, std::map<std::string, Term> subst, FreshNames& fresh) {
    Rule out = rule;
    for (const std::string& v : rule.vars) subst.erase(v);
    if (subst.empty()) return out;
    std::map<std::string, Term> rename;
    for (std::string& v : out.vars) {
        if (subst_mentions(subst, v)) {
            std::string nv = fresh.next("v");
            rename.emplace(v, Term::var(nv));
            v = nv;
        }
    }
    for (auto& [k, t] : rename) subst.emplace(k, t);
    for (Term& t : out.head_args) t = substitute(t, subst);
    out.body = substitute_impl(rule.body, subst, fresh);
    return out;
}

Formula substitute_impl(const Formula& f, const std::map<std::string, Term>& subst, FreshNames& fresh) {
    if (subst.empty()) return f;
    return std::visit(
        Overloaded{
            [&](const AtomNode& n) {
                std::vector<Term> args;
                for (const Term& t : n.args) args.push_back(substitute(t, subst));
                return atom(n.predicate, std::move(args));
            },
            [&](const EqualNode& n) { return equal(substitute(n.lhs, subst), substitute(n.rhs, subst)); },
            [&](const TruthNode&) { return f; },
            [&](const NotNode& n) { return negate(substitute_impl(n.sub, subst, fresh)); },
            [&](const BinaryNode& n) {
                return binary(n.op, substitute_impl(n.lhs, subst, fresh), substitute_impl(n.rhs, subst, fresh));
            },
            [&](const QuantNode& n) {
                if (n.kind != BinderKind::Object) {
                    if (!subst_mentions(subst, n.name))
                        return quantify(n.quantifier, n.kind, n.name, n.arity, substitute_impl(n.body, subst, fresh));
                    // A bound function or predicate would capture a symbol of the substituted terms.
                    std::string nv = fresh.next(n.kind == BinderKind::Predicate ? "P" : "f");
                    Formula body = n.body;
                    if (n.kind == BinderKind::Predicate) {
                        body = rename_predicates(body, {{n.name, nv}});
                    } else {
                        throw NameCollision("function binder '" + n.name + "' captures a substituted term");
                    }
                    return quantify(n.quantifier, n.kind, nv, n.arity, substitute_impl(body, subst, fresh));
                }
                std::map<std::string, Term> inner = subst;
                inner.erase(n.name);
                if (inner.empty()) return f;
                if (!subst_mentions(inner, n.name))
                    return quantify(n.quantifier, n.kind, n.name, 0, substitute_impl(n.body, inner, fresh));
                std::string nv = fresh.next("v");
                Formula body = substitute_impl(n.body, {{n.name, Term::var(nv)}}, fresh);
                return quantify(n.quantifier, n.kind, nv, 0, substitute_impl(body, inner, fresh));
            },
            [&](const DefNode& n) {
                Definition def;
                for (const Rule& r : n.definition->rules) def.rules.push_back(substitute_rule(r, subst, fresh));
                return definition(std::move(def));
            },
        },
        f.node().v);
}

bool mentions_any_free(const Formula& f, const std::set<std::string>& preds) {
    bool found = false;
    for_each_atom(f, [&](const AtomNode& a, bool) {
        if (preds.count(a.predicate)) found = true;
    });
    return found;
}

void visit_atoms(const Formula& f, bool positive, std::set<std::string>& shadowed,
                 const std::function<void(const AtomNode&, bool)>& visit) {
    std::visit(Overloaded{
                   [&](const AtomNode& n) {
                       if (!shadowed.count(n.predicate)) visit(n, positive);
                   },
                   [&](const EqualNode&) {},
                   [&](const TruthNode&) {},
                   [&](const NotNode& n) { visit_atoms(n.sub, !positive, shadowed, visit); },
                   [&](const BinaryNode& n) {
                       switch (n.op) {
                           case Connective::And:
                           case Connective::Or:
                               visit_atoms(n.lhs, positive, shadowed, visit);
                               visit_atoms(n.rhs, positive, shadowed, visit);
                               break;
                           case Connective::Implies:
                               visit_atoms(n.lhs, !positive, shadowed, visit);
                               visit_atoms(n.rhs, positive, shadowed, visit);
                               break;
                           case Connective::Iff:
                               for (bool p : {positive, !positive}) {
                                   visit_atoms(n.lhs, p, shadowed, visit);
                                   visit_atoms(n.rhs, p, shadowed, visit);
                               }
                               break;
                       }
                   },
                   [&](const QuantNode& n) {
                       bool added = n.kind == BinderKind::Predicate && shadowed.insert(n.name).second;
                       visit_atoms(n.body, positive, shadowed, visit);
                       if (added) shadowed.erase(n.name);
                   },
                   [&](const DefNode& n) {
                       for (const Rule& r : n.definition->rules) visit_atoms(r.body, positive, shadowed, visit);
                   },
               },
               f.node().v);
}

Formula prime_negatives(const Formula& f, bool positive, const std::set<std::string>& defined,
                        const std::map<std::string, std::string>& primed) {
    return std::visit(
        Overloaded{
            [&](const AtomNode& n) {
                if (positive || !defined.count(n.predicate)) return f;
                return atom(primed.at(n.predicate), n.args);
            },
            [&](const EqualNode&) { return f; },
            [&](const TruthNode&) { return f; },
            [&](const NotNode& n) { return negate(prime_negatives(n.sub, !positive, defined, primed)); },
            [&](const BinaryNode& n) {
                switch (n.op) {
                    case Connective::And:
                    case Connective::Or:
                        return binary(n.op, prime_negatives(n.lhs, positive, defined, primed),
                                      prime_negatives(n.rhs, positive, defined, primed));
                    case Connective::Implies:
                        return implies(prime_negatives(n.lhs, !positive, defined, primed),
                                       prime_negatives(n.rhs, positive, defined, primed));
                    case Connective::Iff:
                        if (!mentions_any_free(f, defined)) return f;
                        return prime_negatives(conj(implies(n.lhs, n.rhs), implies(n.rhs, n.lhs)), positive,
                                               defined, primed);
                }
                return f;
            },
            [&](const QuantNode& n) {
                if (n.kind == BinderKind::Predicate && defined.count(n.name)) return f;
                return quantify(n.quantifier, n.kind, n.name, n.arity,
                                prime_negatives(n.body, positive, defined, primed));
            },
            [&](const DefNode&) { return f; },
        },
        f.node().v);
}

}  // namespace

std::string FreshNames::next(const std::string& stem) {
    for (;;) {
        std::string name = "$" + stem + std::to_string(counters_[stem]++);
        if (taken_.insert(name).second) return name;
    }
}

std::set<std::string> free_symbols(const Term& t) {
    std::set<std::string> out;
    collect_free(t, out);
    return out;
}

std::set<std::string> free_symbols(const Formula& f) {
    return std::visit(Overloaded{
                          [&](const AtomNode& n) {
                              std::set<std::string> out{n.predicate};
                              for (const Term& t : n.args) collect_free(t, out);
                              return out;
                          },
                          [&](const EqualNode& n) {
                              std::set<std::string> out;
                              collect_free(n.lhs, out);
                              collect_free(n.rhs, out);
                              return out;
                          },
                          [&](const TruthNode&) { return std::set<std::string>{}; },
                          [&](const NotNode& n) { return free_symbols(n.sub); },
                          [&](const BinaryNode& n) {
                              std::set<std::string> out = free_symbols(n.lhs);
                              out.merge(free_symbols(n.rhs));
                              return out;
                          },
                          [&](const QuantNode& n) {
                              std::set<std::string> out = free_symbols(n.body);
                              out.erase(n.name);
                              return out;
                          },
                          [&](const DefNode& n) { return free_symbols(*n.definition); },
                      },
                      f.node().v);
}

std::set<std::string> free_symbols(const Definition& def) {
    std::set<std::string> out;
    for (const Rule& r : def.rules) {
        std::set<std::string> rule_syms = free_symbols(r.body);
        rule_syms.insert(r.head);
        for (const Term& t : r.head_args) collect_free(t, rule_syms);
        for (const std::string& v : r.vars) rule_syms.erase(v);
        out.merge(rule_syms);
    }
    return out;
}

std::set<std::string> all_names(const Formula& f) {
    std::set<std::string> out;
    collect_all(f, out);
    return out;
}

std::set<std::string> all_names(const Definition& def) {
    std::set<std::string> out;
    collect_all(def, out);
    return out;
}

std::vector<std::string> defined_symbols(const Definition& def) {
    std::vector<std::string> out;
    for (const Rule& r : def.rules)
        if (std::find(out.begin(), out.end(), r.head) == out.end()) out.push_back(r.head);
    return out;
}

Vocabulary defined_vocabulary(const Definition& def) {
    Vocabulary v;
    for (const Rule& r : def.rules) {
        const Symbol* s = v.find(r.head);
        if (s && s->arity != r.head_args.size())
            throw ArityError("defined predicate '" + r.head + "' used with arities " + std::to_string(s->arity) +
                             " and " + std::to_string(r.head_args.size()));
        v.add_predicate(r.head, r.head_args.size());
    }
    return v;
}

Vocabulary open_symbols(const Definition& def, const Vocabulary& tau) {
    for (const std::string& s : free_symbols(def))
        if (!tau.contains(s))
            throw FreeSymbolOutsideVocab("'" + s + "' occurs free in the definition but is not in the vocabulary");
    return tau.without(defined_symbols(def));
}

void for_each_atom(const Formula& f, const std::function<void(const AtomNode&, bool positive)>& visit) {
    std::set<std::string> shadowed;
    visit_atoms(f, true, shadowed, visit);
}

bool is_positive(const Definition& def) {
    const std::vector<std::string> d = defined_symbols(def);
    const std::set<std::string> defined(d.begin(), d.end());
    bool positive = true;
    for (const Rule& r : def.rules)
        for_each_atom(r.body, [&](const AtomNode& a, bool pos) {
            if (!pos && defined.count(a.predicate)) positive = false;
        });
    return positive;
}

bool is_non_recursive(const Definition& def) {
    const std::vector<std::string> d = defined_symbols(def);
    const std::set<std::string> defined(d.begin(), d.end());
    return std::none_of(def.rules.begin(), def.rules.end(),
                        [&](const Rule& r) { return mentions_any_free(r.body, defined); });
}

Term substitute(const Term& t, const std::map<std::string, Term>& subst) {
    if (t.is_var()) {
        auto it = subst.find(t.name);
        return it == subst.end() ? t : it->second;
    }
    Term out = t;
    for (Term& a : out.args) a = substitute(a, subst);
    return out;
}

Formula substitute(const Formula& f, const std::map<std::string, Term>& subst) {
    FreshNames fresh(subst_names(f, subst));
    return substitute_impl(f, subst, fresh);
}

Formula rename_predicates(const Formula& f, const std::map<std::string, std::string>& renaming) {
    if (renaming.empty()) return f;
    return std::visit(
        Overloaded{
            [&](const AtomNode& n) {
                auto it = renaming.find(n.predicate);
                return it == renaming.end() ? f : atom(it->second, n.args);
            },
            [&](const EqualNode&) { return f; },
            [&](const TruthNode&) { return f; },
            [&](const NotNode& n) { return negate(rename_predicates(n.sub, renaming)); },
            [&](const BinaryNode& n) {
                return binary(n.op, rename_predicates(n.lhs, renaming), rename_predicates(n.rhs, renaming));
            },
            [&](const QuantNode& n) {
                if (n.kind == BinderKind::Predicate && renaming.count(n.name)) {
                    auto inner = renaming;
                    inner.erase(n.name);
                    return quantify(n.quantifier, n.kind, n.name, n.arity, rename_predicates(n.body, inner));
                }
                return quantify(n.quantifier, n.kind, n.name, n.arity, rename_predicates(n.body, renaming));
            },
            [&](const DefNode& n) { return definition(rename_predicates(*n.definition, renaming)); },
        },
        f.node().v);
}

Definition rename_predicates(const Definition& def, const std::map<std::string, std::string>& renaming) {
    Definition out = def;
    for (Rule& r : out.rules) {
        if (auto it = renaming.find(r.head); it != renaming.end()) r.head = it->second;
        r.body = rename_predicates(r.body, renaming);
    }
    return out;
}

Definition single_rule_form(const Definition& def) {
    Vocabulary dv = defined_vocabulary(def);
    std::set<std::string> taken = all_names(def);
    FreshNames fresh(taken);

    // Names that are symbols rather than variables must not be reused as head variables.
    std::set<std::string> symbols = free_symbols(def);

    Definition out;
    for (const std::string& head : defined_symbols(def)) {
        const std::size_t arity = dv.at(head).arity;
        std::vector<const Rule*> rules;
        for (const Rule& r : def.rules)
            if (r.head == head) rules.push_back(&r);

        std::vector<std::string> head_vars(arity);
        std::set<std::string> used;
        for (std::size_t j = 0; j < arity; ++j) {
            for (const Rule* r : rules) {
                const Term& t = r->head_args[j];
                if (t.is_var() && !used.count(t.name) && !symbols.count(t.name)) {
                    head_vars[j] = t.name;
                    break;
                }
            }
            if (head_vars[j].empty()) head_vars[j] = fresh.next("x");
            used.insert(head_vars[j]);
        }

        std::vector<Formula> disjuncts;
        for (const Rule* r : rules) {
            std::map<std::string, Term> subst;
            std::vector<bool> substituted(arity, false);
            for (std::size_t j = 0; j < arity; ++j) {
                const Term& t = r->head_args[j];
                if (t.is_var() && !subst.count(t.name) &&
                    std::find(r->vars.begin(), r->vars.end(), t.name) != r->vars.end()) {
                    subst.emplace(t.name, Term::var(head_vars[j]));
                    substituted[j] = true;
                }
            }
            std::vector<std::string> exist_vars;
            for (const std::string& v : r->vars) {
                if (subst.count(v)) continue;
                std::string nv = fresh.next("y");
                subst.emplace(v, Term::var(nv));
                exist_vars.push_back(nv);
            }
            std::vector<Formula> parts;
            for (std::size_t j = 0; j < arity; ++j)
                if (!substituted[j])
                    parts.push_back(equal(Term::var(head_vars[j]), substitute(r->head_args[j], subst)));
            parts.push_back(substitute(r->body, subst));
            Formula body = parts.size() == 1 ? parts.front()
                                             : conj(conj(std::vector<Formula>(parts.begin(), parts.end() - 1)),
                                                    parts.back());
            disjuncts.push_back(exists(exist_vars, body));
        }

        Rule single;
        single.vars = head_vars;
        single.head = head;
        for (const std::string& v : head_vars) single.head_args.push_back(Term::var(v));
        single.body = disj(disjuncts);
        single.loc = rules.front()->loc;
        out.rules.push_back(std::move(single));
    }
    return out;
}

RenamedDefinition rename_negatives(const Definition& def, const Vocabulary& tau) {
    const std::vector<std::string> d = defined_symbols(def);
    const std::set<std::string> defined(d.begin(), d.end());
    const Vocabulary dv = defined_vocabulary(def);

    std::set<std::string> negative;
    for (const Rule& r : def.rules)
        for_each_atom(r.body, [&](const AtomNode& a, bool pos) {
            if (!pos && defined.count(a.predicate)) negative.insert(a.predicate);
        });

    RenamedDefinition out;
    out.vocab = tau.united(dv);
    std::set<std::string> taken = all_names(def);
    for (const Symbol& s : tau.symbols()) taken.insert(s.name);
    for (const std::string& x : d) {
        if (!negative.count(x)) continue;
        std::string p = x + "'";
        while (taken.count(p)) {
            p += "'";
            if (p.size() > x.size() + 16) throw NameCollision("no free primed name for '" + x + "'");
        }
        taken.insert(p);
        out.primed.emplace(x, p);
        out.vocab.add_predicate(p, dv.at(x).arity);
    }

    out.definition = def;
    if (out.primed.empty()) return out;
    for (Rule& r : out.definition.rules) r.body = prime_negatives(r.body, true, negative, out.primed);
    return out;
}

Formula material_conjunction(const Definition& def) {
    std::vector<Formula> parts;
    for (const Rule& r : def.rules) parts.push_back(forall(r.vars, implies(r.body, atom(r.head, r.head_args))));
    return conj(parts);
}

namespace {

using Binding = std::pair<std::string, std::string>;

class AlphaEq {
public:
    bool names(const std::string& a, const std::string& b) const {
        for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
            const bool la = it->first == a;
            const bool rb = it->second == b;
            if (la || rb) return la && rb;
        }
        return a == b;
    }

    bool terms(const Term& a, const Term& b) const {
        if (a.kind != b.kind || a.args.size() != b.args.size() || !names(a.name, b.name)) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (!terms(a.args[i], b.args[i])) return false;
        return true;
    }

    bool term_lists(const std::vector<Term>& a, const std::vector<Term>& b) const {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!terms(a[i], b[i])) return false;
        return true;
    }

    bool formulas(const Formula& a, const Formula& b) {
        const auto& va = a.node().v;
        const auto& vb = b.node().v;
        if (va.index() != vb.index()) return false;
        if (auto n = a.as<AtomNode>()) {
            auto m = b.as<AtomNode>();
            return names(n->predicate, m->predicate) && term_lists(n->args, m->args);
        }
        if (auto n = a.as<EqualNode>()) {
            auto m = b.as<EqualNode>();
            return terms(n->lhs, m->lhs) && terms(n->rhs, m->rhs);
        }
        if (auto n = a.as<TruthNode>()) return n->value == b.as<TruthNode>()->value;
        if (auto n = a.as<NotNode>()) return formulas(n->sub, b.as<NotNode>()->sub);
        if (auto n = a.as<BinaryNode>()) {
            auto m = b.as<BinaryNode>();
            return n->op == m->op && formulas(n->lhs, m->lhs) && formulas(n->rhs, m->rhs);
        }
        if (auto n = a.as<QuantNode>()) {
            auto m = b.as<QuantNode>();
            if (n->quantifier != m->quantifier || n->kind != m->kind || n->arity != m->arity) return false;
            bound_.emplace_back(n->name, m->name);
            bool eq = formulas(n->body, m->body);
            bound_.pop_back();
            return eq;
        }
        const Definition& da = *a.as<DefNode>()->definition;
        const Definition& db = *b.as<DefNode>()->definition;
        if (da.rules.size() != db.rules.size()) return false;
        for (std::size_t i = 0; i < da.rules.size(); ++i) {
            const Rule& ra = da.rules[i];
            const Rule& rb = db.rules[i];
            if (ra.vars.size() != rb.vars.size() || !names(ra.head, rb.head)) return false;
            for (std::size_t k = 0; k < ra.vars.size(); ++k) bound_.emplace_back(ra.vars[k], rb.vars[k]);
            bool eq = term_lists(ra.head_args, rb.head_args) && formulas(ra.body, rb.body);
            bound_.resize(bound_.size() - ra.vars.size());
            if (!eq) return false;
        }
        return true;
    }

private:
    std::vector<Binding> bound_;
};

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) { return AlphaEq{}.formulas(a, b); }

}  // namespace idlogic
