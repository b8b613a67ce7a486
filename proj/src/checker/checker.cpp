#include "idlogic/checker/checker.hpp"

#include <cmath>

#include "idlogic/engine/engine.hpp"
#include "idlogic/error.hpp"
#include "idlogic/syntax/analysis.hpp"

namespace idlogic {

namespace {

struct Binding {
    std::string name;
    BinderKind kind = BinderKind::Object;
    Element object;
    FunctionTable function;
    Relation relation;
};

ExtensionStream make_stream(const Theory& t, const Structure& base, const std::set<std::string>& free_preds,
                            std::uint64_t budget) {
    std::vector<std::string> names(free_preds.begin(), free_preds.end());
    Structure b = base.without(names);
    Vocabulary full = b.vocab();
    for (const std::string& p : names) {
        const Symbol* s = t.vocab.find(p);
        if (!s || !s->is_predicate()) throw VocabularyError("'" + p + "' is not a predicate of the theory");
        full.add(*s);
    }
    return enumerate_extensions(ExtensionLattice(b, full), budget);
}

}  // namespace

class Evaluation {
public:
    Evaluation(Checker& checker, const Structure& base) : checker_(checker), base_(base) {}

    bool formula(const Formula& f) {
        if (auto a = f.as<AtomNode>()) {
            const std::size_t idx = index(a->args);
            if (const Binding* b = lookup(a->predicate)) return b->relation.test(idx);
            return base_.relation(a->predicate).test(idx);
        }
        if (auto e = f.as<EqualNode>()) return term(e->lhs) == term(e->rhs);
        if (auto t = f.as<TruthNode>()) return t->value;
        if (auto n = f.as<NotNode>()) return !formula(n->sub);
        if (auto b = f.as<BinaryNode>()) {
            switch (b->op) {
                case Connective::And: return formula(b->lhs) && formula(b->rhs);
                case Connective::Or: return formula(b->lhs) || formula(b->rhs);
                case Connective::Implies: return !formula(b->lhs) || formula(b->rhs);
                case Connective::Iff: return formula(b->lhs) == formula(b->rhs);
            }
        }
        if (auto q = f.as<QuantNode>()) return quantifier(*q);
        return definition(f.as<DefNode>()->definition);
    }

private:
    const Binding* lookup(const std::string& name) const {
        for (auto it = env_.rbegin(); it != env_.rend(); ++it)
            if (it->name == name) return &*it;
        return nullptr;
    }

    Element term(const Term& t) {
        const Binding* b = lookup(t.name);
        if (b && b->kind == BinderKind::Object) return b->object;
        const std::size_t idx = index(t.args);
        if (b && b->kind == BinderKind::Function) return b->function.at(idx);
        return base_.function(t.name).at(idx);
    }

    // Row-major position of the argument tuple; avoids materializing it.
    std::size_t index(const std::vector<Term>& ts) {
        const std::size_t n = base_.domain().size();
        std::size_t idx = 0;
        for (const Term& t : ts) idx = idx * n + term(t).id;
        return idx;
    }

    bool quantifier(const QuantNode& q) {
        const bool exists = q.quantifier == Quantifier::Exists;
        const auto n = static_cast<std::uint32_t>(base_.domain().size());
        env_.push_back({q.name, q.kind, {}, {}, {}});
        bool result = !exists;
        switch (q.kind) {
            case BinderKind::Object:
                for (std::uint32_t e = 0; e < n && result != exists; ++e) {
                    env_.back().object = Element{e};
                    if (formula(q.body) == exists) result = exists;
                }
                break;
            case BinderKind::Predicate: {
                const std::size_t slots = tuple_count(n, q.arity);
                const std::uint64_t total =
                    checked_power_of_two(slots, checker_.options_.budget, "quantifier over " + q.name);
                env_.back().relation = Relation(n, q.arity);
                for (std::uint64_t c = 0; c < total && result != exists; ++c) {
                    Relation& r = env_.back().relation;
                    for (std::size_t k = 0; k < slots; ++k) r.set(k, (c >> (slots - 1 - k)) & 1U);
                    if (formula(q.body) == exists) result = exists;
                }
                break;
            }
            case BinderKind::Function: {
                const std::size_t slots = tuple_count(n, q.arity);
                const double count = std::pow(static_cast<double>(n), static_cast<double>(slots));
                if (count > static_cast<double>(checker_.options_.budget))
                    throw BudgetExceeded("quantifier over " + q.name + ": " + std::to_string(n) + "^" +
                                         std::to_string(slots) + " candidates exceed the budget of " +
                                         std::to_string(checker_.options_.budget));
                std::vector<Element> values(slots, Element{0});
                for (;;) {
                    env_.back().function = FunctionTable(n, q.arity, values);
                    if (formula(q.body) == exists) {
                        result = exists;
                        break;
                    }
                    std::size_t pos = slots;
                    while (pos > 0 && ++values[pos - 1].id == n) values[--pos].id = 0;
                    if (pos == 0) break;
                }
                break;
            }
        }
        env_.pop_back();
        return result;
    }

    // Bound symbols become part of the structure handed to the engine.
    bool definition(const std::shared_ptr<const Definition>& def) {
        Structure s = base_;
        if (!env_.empty()) {
            std::vector<std::string> names;
            for (const Binding& b : env_) names.push_back(b.name);
            s = s.without(names);
            std::set<std::string> done;
            for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
                if (!done.insert(it->name).second) continue;
                switch (it->kind) {
                    case BinderKind::Object: s = s.with_constant(it->name, it->object); break;
                    case BinderKind::Function: s = s.with_function(it->name, it->function); break;
                    case BinderKind::Predicate: s = s.with_relation(it->name, it->relation); break;
                }
            }
        }
        return satisfies_definition(s, checker_.grounding(def, s));
    }

    Checker& checker_;
    const Structure& base_;
    std::vector<Binding> env_;
};

const GroundRuleSet& Checker::grounding(const std::shared_ptr<const Definition>& def, const Structure& s) {
    // Open predicates stay symbolic, so the grounding depends only on the
    // domain and the function tables.
    std::string key;
    for (const std::string& name : free_symbols(*def)) {
        const Symbol* sym = s.vocab().find(name);
        if (!sym || !sym->is_function()) continue;
        key += name + ':';
        for (Element e : s.function(name).values()) key += std::to_string(e.id) + ',';
        key += ';';
    }
    key += '#' + std::to_string(s.domain().size());
    for (const std::string& name : s.domain().names()) key += "," + name;

    auto it = cache_.find({def.get(), key});
    if (it != cache_.end()) return it->second.ground;
    if (cache_.size() > 4096) cache_.clear();
    GroundOptions opts;
    opts.fold_open = false;
    auto [pos, _] = cache_.emplace(std::make_pair(def.get(), key), CacheEntry{def, ground_definition(*def, s, opts)});
    return pos->second.ground;
}

bool Checker::satisfies(const Structure& i, const Formula& phi) {
    auto it = free_cache_.find(phi.get());
    if (it == free_cache_.end()) {
        if (free_cache_.size() > 4096) free_cache_.clear();
        it = free_cache_.emplace(phi.get(), FreeEntry{phi, free_symbols(phi)}).first;
    }
    for (const std::string& name : it->second.names)
        if (!i.interprets(name)) throw FreeSymbolUninterpreted("'" + name + "' is free but not interpreted");
    return Evaluation(*this, i).formula(phi);
}

bool Checker::satisfies_theory(const Structure& i, const Theory& t) {
    for (const Formula& f : t.axioms)
        if (!satisfies(i, f)) return false;
    return true;
}

bool satisfies(const Structure& i, const Formula& phi, CheckerOptions options) {
    return Checker(options).satisfies(i, phi);
}

bool satisfies_theory(const Structure& i, const Theory& t, CheckerOptions options) {
    return Checker(options).satisfies_theory(i, t);
}

ModelStream::ModelStream(const Theory& t, const Structure& base, const std::set<std::string>& free_preds,
                         CheckerOptions options)
    : theory_(t), checker_(options), stream_(make_stream(t, base, free_preds, options.budget)) {}

std::optional<Structure> ModelStream::next() {
    while (auto candidate = stream_.next())
        if (checker_.satisfies_theory(*candidate, theory_)) return candidate;
    return std::nullopt;
}

std::vector<Structure> enumerate_models(const Theory& t, const Structure& base,
                                        const std::set<std::string>& free_preds, CheckerOptions options) {
    ModelStream stream(t, base, free_preds, options);
    std::vector<Structure> out;
    while (auto m = stream.next()) out.push_back(std::move(*m));
    return out;
}

}  // namespace idlogic
