#include "idlogic/syntax/printer.hpp"

#include <map>
#include <set>

#include "idlogic/syntax/analysis.hpp"

namespace idlogic {

namespace {

// Binding strength, loosest first.
enum Prec { kQuant = 0, kIff = 1, kImplies = 2, kOr = 3, kAnd = 4, kUnary = 5, kAtom = 6 };

int precedence(const Formula& f) {
    if (auto b = f.as<BinaryNode>()) {
        switch (b->op) {
            case Connective::Iff: return kIff;
            case Connective::Implies: return kImplies;
            case Connective::Or: return kOr;
            case Connective::And: return kAnd;
        }
    }
    if (f.as<QuantNode>()) return kQuant;
    if (auto n = f.as<NotNode>(); n && !n->sub.as<EqualNode>()) return kUnary;
    return kAtom;
}

const char* symbol(Connective op) {
    switch (op) {
        case Connective::And: return " & ";
        case Connective::Or: return " | ";
        case Connective::Implies: return " => ";
        case Connective::Iff: return " <=> ";
    }
    return "?";
}

void print_args(const std::vector<Term>& args, std::string& out) {
    if (args.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ',';
        out += to_string(args[i]);
    }
    out += ')';
}

class Printer {
public:
    std::string out;

    // `rightmost`: nothing follows this formula in its enclosing text, so a
    // quantifier may extend to the end without parentheses. `prefix`: part of
    // the outermost quantifier prefix, whose body is printed bare.
    void formula(const Formula& f, int min_prec, bool rightmost, bool prefix = false) {
        const int p = precedence(f);
        const bool paren = p == kQuant ? !rightmost : p < min_prec;
        if (paren) out += '(';
        node(f, paren || rightmost, prefix);
        if (paren) out += ')';
    }

    void rule(const Rule& r) {
        if (!r.vars.empty()) {
            out += '!';
            for (std::size_t i = 0; i < r.vars.size(); ++i) {
                if (i) out += ' ';
                out += r.vars[i];
            }
            out += ": ";
        }
        out += r.head;
        print_args(r.head_args, out);
        if (auto t = r.body.as<TruthNode>(); !(t && t->value)) {
            out += " <- ";
            formula(r.body, kQuant, true);
        }
        out += '.';
    }

    void definition(const Definition& def, bool multiline) {
        out += multiline ? "{\n" : "{ ";
        for (const Rule& r : def.rules) {
            if (multiline) out += "  ";
            rule(r);
            out += multiline ? "\n" : " ";
        }
        out += '}';
    }

    bool multiline_defs = false;

private:
    void node(const Formula& f, bool rightmost, bool prefix) {
        if (auto n = f.as<AtomNode>()) {
            out += n->predicate;
            print_args(n->args, out);
        } else if (auto n = f.as<EqualNode>()) {
            out += to_string(n->lhs) + "=" + to_string(n->rhs);
        } else if (auto n = f.as<TruthNode>()) {
            out += n->value ? "true" : "false";
        } else if (auto n = f.as<NotNode>()) {
            if (auto eq = n->sub.as<EqualNode>()) {
                out += to_string(eq->lhs) + "~=" + to_string(eq->rhs);
            } else {
                out += '~';
                formula(n->sub, kUnary, rightmost);
            }
        } else if (auto n = f.as<BinaryNode>()) {
            const int p = precedence(f);
            int left = p + 1;
            int right = p + 1;
            if (n->op == Connective::Implies) right = p;  // right-associative
            if (n->op == Connective::And || n->op == Connective::Or) left = p;
            formula(n->lhs, left, false);
            out += symbol(n->op);
            formula(n->rhs, right, rightmost);
        } else if (auto n = f.as<QuantNode>()) {
            quantifier(*n, rightmost, prefix);
        } else {
            definition(*f.as<DefNode>()->definition, multiline_defs && prefix);
        }
    }

    void binder(const QuantNode& q) {
        switch (q.kind) {
            case BinderKind::Object: out += q.name; break;
            case BinderKind::Predicate: out += q.name + "/" + std::to_string(q.arity); break;
            case BinderKind::Function: out += "func " + q.name + "/" + std::to_string(q.arity); break;
        }
    }

    void quantifier(const QuantNode& q, bool rightmost, bool prefix) {
        out += q.quantifier == Quantifier::Forall ? '!' : '?';
        binder(q);
        const QuantNode* cur = &q;
        while (auto next = cur->body.as<QuantNode>()) {
            if (next->quantifier != q.quantifier) break;
            out += ' ';
            binder(*next);
            cur = next;
        }
        out += ": ";
        const Formula& body = cur->body;
        if (prefix) {
            formula(body, kQuant, rightmost, true);
        } else {
            const bool bare = precedence(body) >= kUnary || body.as<QuantNode>();
            formula(body, bare ? kQuant : kUnary, rightmost);
        }
    }
};

// Renaming of `$` binders ------------------------------------------------------

class Tidy {
public:
    explicit Tidy(std::set<std::string> taken) : taken_(std::move(taken)) {}

    Formula formula(const Formula& f) {
        if (auto n = f.as<AtomNode>()) return atom(name(n->predicate), terms(n->args));
        if (auto n = f.as<EqualNode>()) return equal(term(n->lhs), term(n->rhs));
        if (f.as<TruthNode>()) return f;
        if (auto n = f.as<NotNode>()) return negate(formula(n->sub));
        if (auto n = f.as<BinaryNode>()) return binary(n->op, formula(n->lhs), formula(n->rhs));
        if (auto n = f.as<QuantNode>()) {
            const std::size_t mark = env_.size();
            std::string bound = bind(n->name, n->kind);
            Formula body = formula(n->body);
            env_.resize(mark);
            return quantify(n->quantifier, n->kind, bound, n->arity, body);
        }
        return idlogic::definition(definition(*f.as<DefNode>()->definition));
    }

    Definition definition(const Definition& def) {
        Definition out;
        for (const Rule& r : def.rules) {
            const std::size_t mark = env_.size();
            Rule nr;
            nr.loc = r.loc;
            for (const std::string& v : r.vars) nr.vars.push_back(bind(v, BinderKind::Object));
            nr.head = name(r.head);
            nr.head_args = terms(r.head_args);
            nr.body = formula(r.body);
            env_.resize(mark);
            out.rules.push_back(std::move(nr));
        }
        return out;
    }

private:
    std::string name(const std::string& n) const {
        for (auto it = env_.rbegin(); it != env_.rend(); ++it)
            if (it->first == n) return it->second;
        return n;
    }

    Term term(const Term& t) {
        Term out = t;
        out.name = name(t.name);
        out.args = terms(t.args);
        return out;
    }

    std::vector<Term> terms(const std::vector<Term>& ts) {
        std::vector<Term> out;
        out.reserve(ts.size());
        for (const Term& t : ts) out.push_back(term(t));
        return out;
    }

    bool in_scope(const std::string& candidate) const {
        for (const auto& [from, to] : env_)
            if (to == candidate) return true;
        return false;
    }

    std::string bind(const std::string& original, BinderKind kind) {
        if (original.empty() || original[0] != '$') {
            env_.emplace_back(original, original);
            return original;
        }
        static const std::vector<std::string> objects = {"x", "y", "z", "u", "v", "w"};
        static const std::vector<std::string> preds = {"X", "Y", "Z", "U", "V", "W"};
        static const std::vector<std::string> funcs = {"f", "g", "h"};
        const auto& stems = kind == BinderKind::Object ? objects : kind == BinderKind::Predicate ? preds : funcs;
        for (int round = 0;; ++round) {
            for (const std::string& s : stems) {
                std::string candidate = round == 0 ? s : s + std::to_string(round);
                if (taken_.count(candidate) || in_scope(candidate)) continue;
                env_.emplace_back(original, candidate);
                return candidate;
            }
        }
    }

    std::set<std::string> taken_;
    std::vector<std::pair<std::string, std::string>> env_;
};

}  // namespace

std::string to_string(const Term& t) {
    std::string out = t.name;
    print_args(t.args, out);
    return out;
}

std::string to_string(const Formula& f) {
    Printer p;
    p.formula(f, kQuant, true, true);
    return p.out;
}

std::string to_string(const Rule& r) {
    Printer p;
    p.rule(r);
    return p.out;
}

std::string to_string(const Definition& def) {
    Printer p;
    p.definition(def, false);
    return p.out;
}

std::string to_string(const Vocabulary& vocab) {
    std::string preds;
    std::string funcs;
    std::string consts;
    for (const Symbol& s : vocab.symbols()) {
        if (s.is_predicate()) {
            preds += (preds.empty() ? "" : ", ") + s.name + (s.arity ? "/" + std::to_string(s.arity) : "");
        } else if (s.arity == 0) {
            consts += (consts.empty() ? "" : ", ") + s.name;
        } else {
            funcs += (funcs.empty() ? "" : ", ") + s.name + "/" + std::to_string(s.arity);
        }
    }
    std::string out;
    if (!preds.empty()) out += "pred " + preds + ".\n";
    if (!funcs.empty()) out += "func " + funcs + ".\n";
    if (!consts.empty()) out += "const " + consts + ".\n";
    return out;
}

std::string to_string(const Theory& th) {
    std::string out = to_string(th.vocab);
    for (const Formula& f : th.axioms) {
        Printer p;
        p.multiline_defs = true;
        p.formula(f, kQuant, true, true);
        out += p.out + ".\n";
    }
    return out;
}

Formula tidy_names(const Formula& f) { return Tidy(all_names(f)).formula(f); }

Definition tidy_names(const Definition& def) { return Tidy(all_names(def)).definition(def); }

}  // namespace idlogic
