#include "idlogic/ground/ground.hpp"

#include <algorithm>
#include <set>

#include "idlogic/error.hpp"
#include "idlogic/syntax/analysis.hpp"

namespace idlogic {

// AtomTable ----------------------------------------------------------------------

AtomTable::AtomTable(std::size_t domain_size, std::vector<Entry> predicates)
    : domain_size_(domain_size), preds_(std::move(predicates)) {
    std::size_t offset = 0;
    for (Entry& e : preds_) {
        e.offset = static_cast<AtomId>(offset);
        offset += tuple_count(domain_size_, e.arity);
        if (e.defined) defined_count_ = offset;
    }
    size_ = offset;
}

const AtomTable::Entry* AtomTable::find(const std::string& predicate) const {
    for (const Entry& e : preds_)
        if (e.predicate == predicate) return &e;
    return nullptr;
}

std::optional<AtomId> AtomTable::id(const std::string& predicate, const Tuple& args) const {
    const Entry* e = find(predicate);
    if (!e || e->arity != args.size()) return std::nullopt;
    return static_cast<AtomId>(e->offset + tuple_index(args, domain_size_));
}

const AtomTable::Entry& AtomTable::entry_of(AtomId id) const {
    auto it = std::upper_bound(preds_.begin(), preds_.end(), id,
                               [](AtomId v, const Entry& e) { return v < e.offset; });
    return *std::prev(it);
}

GroundAtom AtomTable::atom(AtomId id) const {
    const Entry& e = entry_of(id);
    return {e.predicate, tuple_at(id - e.offset, domain_size_, e.arity)};
}

std::string AtomTable::name(AtomId id, const Domain& domain) const {
    GroundAtom a = atom(id);
    std::string out = a.predicate;
    if (a.args.empty()) return out;
    out += '[';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ',';
        out += domain.name(a.args[i]);
    }
    return out + ']';
}

// Grounding ----------------------------------------------------------------------

namespace {
constexpr NodeId kTrue = 0;
constexpr NodeId kFalse = 1;
}  // namespace

class Grounder {
public:
    Grounder(const Definition& def, const Structure& base, const GroundOptions& options)
        : def_(def), base_(base), options_(options) {}

    GroundRuleSet run() {
        out_.base_ = base_;
        out_.defined_ = defined_symbols(def_);
        build_table();
        out_.nodes_.push_back({NodeKind::True});
        out_.nodes_.push_back({NodeKind::False});

        std::vector<std::vector<NodeId>> disjuncts(out_.atoms_.defined_count());
        const std::size_t n = base_.domain().size();
        for (const Rule& rule : def_.rules) {
            const std::size_t k = rule.vars.size();
            std::vector<std::uint32_t> odometer(k, 0);
            env_.clear();
            for (const std::string& v : rule.vars) env_.emplace_back(v, Element{0});
            for (;;) {
                for (std::size_t i = 0; i < k; ++i) env_[i].second = Element{odometer[i]};
                Tuple head;
                for (const Term& t : rule.head_args) head.push_back(term(t));
                NodeId body = formula(rule.body, true);
                if (body != kFalse) disjuncts[*out_.atoms_.id(rule.head, head)].push_back(body);
                std::size_t pos = k;
                while (pos > 0 && ++odometer[pos - 1] == n) odometer[--pos] = 0;
                if (pos == 0) break;
            }
        }
        out_.bodies_.reserve(disjuncts.size());
        for (auto& d : disjuncts) out_.bodies_.push_back(nary(NodeKind::Or, d));
        return std::move(out_);
    }

private:
    void build_table() {
        const std::size_t n = base_.domain().size();
        const Vocabulary dv = defined_vocabulary(def_);
        const std::set<std::string> defined(out_.defined_.begin(), out_.defined_.end());

        std::map<std::string, std::size_t> open;
        for (const Rule& r : def_.rules)
            for_each_atom(r.body, [&](const AtomNode& a, bool) {
                if (!defined.count(a.predicate)) open.emplace(a.predicate, a.args.size());
            });
        for (const std::string& s : free_symbols(def_)) {
            if (defined.count(s) || open.count(s)) continue;
            if (!base_.interprets(s) || !base_.vocab().at(s).is_function())
                throw MissingFunctionInterpretation("'" + s + "' has no function interpretation");
        }

        std::vector<AtomTable::Entry> entries;
        double total = 0;
        auto add = [&](const std::string& p, std::size_t arity, bool is_defined) {
            entries.push_back({p, arity, 0, is_defined});
            total += static_cast<double>(tuple_count(n, arity));
        };
        for (const std::string& p : out_.defined_) add(p, dv.at(p).arity, true);
        for (const auto& [p, arity] : open) {
            if (options_.fold_open && base_.interprets(p)) {
                const Symbol& s = base_.vocab().at(p);
                if (!s.is_predicate() || s.arity != arity)
                    throw ArityMismatch("'" + p + "' is interpreted with a different kind or arity");
                continue;
            }
            add(p, arity, false);
        }
        if (total > static_cast<double>(options_.atom_budget))
            throw DomainTooLarge(std::to_string(static_cast<unsigned long long>(total)) +
                                 " ground atoms exceed the budget of " + std::to_string(options_.atom_budget));
        out_.atoms_ = AtomTable(n, std::move(entries));
    }

    Element term(const Term& t) const {
        if (t.is_var()) {
            for (auto it = env_.rbegin(); it != env_.rend(); ++it)
                if (it->first == t.name) return it->second;
        }
        Tuple args;
        args.reserve(t.args.size());
        for (const Term& a : t.args) args.push_back(term(a));
        return base_.function(t.name).apply(args);
    }

    NodeId add(GroundNode n) {
        out_.nodes_.push_back(n);
        return static_cast<NodeId>(out_.nodes_.size() - 1);
    }

    NodeId negation(NodeId sub) {
        if (sub == kTrue) return kFalse;
        if (sub == kFalse) return kTrue;
        GroundNode n{NodeKind::Not};
        n.first = static_cast<std::uint32_t>(out_.children_.size());
        n.count = 1;
        out_.children_.push_back(sub);
        return add(n);
    }

    // True/False absorption only; no further simplification.
    NodeId nary(NodeKind kind, const std::vector<NodeId>& parts) {
        const NodeId unit = kind == NodeKind::And ? kTrue : kFalse;
        const NodeId zero = kind == NodeKind::And ? kFalse : kTrue;
        std::vector<NodeId> kept;
        for (NodeId p : parts) {
            if (p == zero) return zero;
            if (p != unit) kept.push_back(p);
        }
        if (kept.empty()) return unit;
        if (kept.size() == 1) return kept.front();
        GroundNode n{kind};
        n.first = static_cast<std::uint32_t>(out_.children_.size());
        n.count = static_cast<std::uint32_t>(kept.size());
        out_.children_.insert(out_.children_.end(), kept.begin(), kept.end());
        return add(n);
    }

    NodeId formula(const Formula& f, bool positive) {
        if (auto a = f.as<AtomNode>()) {
            Tuple args;
            args.reserve(a->args.size());
            for (const Term& t : a->args) args.push_back(term(t));
            if (auto id = out_.atoms_.id(a->predicate, args)) {
                GroundNode n{NodeKind::Atom};
                n.atom = *id;
                n.positive = positive;
                return add(n);
            }
            return base_.holds(a->predicate, args) ? kTrue : kFalse;
        }
        if (auto e = f.as<EqualNode>()) return term(e->lhs) == term(e->rhs) ? kTrue : kFalse;
        if (auto t = f.as<TruthNode>()) return t->value ? kTrue : kFalse;
        if (auto n = f.as<NotNode>()) return negation(formula(n->sub, !positive));
        if (auto b = f.as<BinaryNode>()) {
            switch (b->op) {
                case Connective::And:
                    return nary(NodeKind::And, {formula(b->lhs, positive), formula(b->rhs, positive)});
                case Connective::Or:
                    return nary(NodeKind::Or, {formula(b->lhs, positive), formula(b->rhs, positive)});
                case Connective::Implies:
                    return nary(NodeKind::Or, {negation(formula(b->lhs, !positive)), formula(b->rhs, positive)});
                case Connective::Iff: {
                    // (a ⇒ b) ∧ (b ⇒ a), matching the renaming of negative occurrences.
                    NodeId ab = nary(NodeKind::Or, {negation(formula(b->lhs, !positive)), formula(b->rhs, positive)});
                    NodeId ba = nary(NodeKind::Or, {negation(formula(b->rhs, !positive)), formula(b->lhs, positive)});
                    return nary(NodeKind::And, {ab, ba});
                }
            }
        }
        if (auto q = f.as<QuantNode>(); q && q->kind == BinderKind::Object) {
            std::vector<NodeId> parts;
            env_.emplace_back(q->name, Element{0});
            const auto n = static_cast<std::uint32_t>(base_.domain().size());
            const NodeKind kind = q->quantifier == Quantifier::Exists ? NodeKind::Or : NodeKind::And;
            const NodeId zero = kind == NodeKind::And ? kFalse : kTrue;
            for (std::uint32_t e = 0; e < n; ++e) {
                env_.back().second = Element{e};
                NodeId p = formula(q->body, positive);
                parts.push_back(p);
                if (p == zero) break;
            }
            env_.pop_back();
            return nary(kind, parts);
        }
        throw VocabularyError("rule bodies must be first-order to be grounded");
    }

    const Definition& def_;
    const Structure& base_;
    GroundOptions options_;
    GroundRuleSet out_;
    std::vector<std::pair<std::string, Element>> env_;
};

GroundRuleSet ground_definition(const Definition& def, const Structure& base, const GroundOptions& options) {
    return Grounder(def, base, options).run();
}

// GroundRuleSet ------------------------------------------------------------------

std::vector<std::string> GroundRuleSet::symbolic_open() const {
    std::vector<std::string> out;
    for (const auto& e : atoms_.predicates())
        if (!e.defined) out.push_back(e.predicate);
    return out;
}

bool GroundRuleSet::eval(NodeId id, const AtomValues& lower, const AtomValues& upper) const {
    const GroundNode& n = nodes_[id];
    switch (n.kind) {
        case NodeKind::True: return true;
        case NodeKind::False: return false;
        case NodeKind::Atom:
            return (n.positive && atoms_.is_defined(n.atom)) ? lower[n.atom] : upper[n.atom];
        case NodeKind::Not: return !eval(children_[n.first], lower, upper);
        case NodeKind::And:
            for (std::uint32_t i = 0; i < n.count; ++i)
                if (!eval(children_[n.first + i], lower, upper)) return false;
            return true;
        case NodeKind::Or:
            for (std::uint32_t i = 0; i < n.count; ++i)
                if (eval(children_[n.first + i], lower, upper)) return true;
            return false;
    }
    return false;
}

AtomValues GroundRuleSet::read(const Structure& s) const { return read_atoms(s, true); }

AtomValues GroundRuleSet::read_open(const Structure& s) const { return read_atoms(s, false); }

AtomValues GroundRuleSet::read_atoms(const Structure& s, bool with_defined) const {
    if (s.domain().size() != base_.domain().size()) throw DomainMismatch("structure domain differs from the grounding base");
    AtomValues out(atoms_.size(), 0);
    for (const auto& e : atoms_.predicates()) {
        if (e.defined && !with_defined) continue;
        const Relation& r = s.relation(e.predicate);
        if (r.arity() != e.arity) throw ArityMismatch("'" + e.predicate + "' has the wrong arity");
        const std::size_t count = r.capacity();
        for (std::size_t i = 0; i < count; ++i) out[e.offset + i] = r.test(i);
    }
    return out;
}

Structure GroundRuleSet::write(const AtomValues& values, const Structure& source) const {
    Structure out = source;
    const std::size_t n = base_.domain().size();
    for (const auto& e : atoms_.predicates()) {
        if (!e.defined) continue;
        Relation r(n, e.arity);
        const std::size_t count = r.capacity();
        for (std::size_t i = 0; i < count; ++i)
            if (values[e.offset + i]) r.set(i);
        out = out.with_relation(e.predicate, std::move(r));
    }
    return out;
}

std::string GroundRuleSet::body_string(NodeId id) const {
    const GroundNode& n = nodes_[id];
    switch (n.kind) {
        case NodeKind::True: return "true";
        case NodeKind::False: return "false";
        case NodeKind::Atom: {
            std::string name = atoms_.name(n.atom, base_.domain());
            if (!atoms_.is_defined(n.atom)) return name;
            return (n.positive ? "+" : "-") + name;
        }
        case NodeKind::Not: return "~" + body_string(children_[n.first]);
        case NodeKind::And:
        case NodeKind::Or: {
            std::string out = "(";
            for (std::uint32_t i = 0; i < n.count; ++i) {
                if (i) out += n.kind == NodeKind::And ? " & " : " | ";
                out += body_string(children_[n.first + i]);
            }
            return out + ")";
        }
    }
    return "?";
}

std::string GroundRuleSet::dump() const {
    std::string out;
    for (AtomId a = 0; a < atoms_.defined_count(); ++a) {
        std::string body = body_string(bodies_[a]);
        const GroundNode& n = nodes_[bodies_[a]];
        if (n.kind == NodeKind::And || n.kind == NodeKind::Or) body = body.substr(1, body.size() - 2);
        out += atoms_.name(a, base_.domain()) + " := " + body + "\n";
    }
    return out;
}

namespace {

AtomId defined_id(const GroundRuleSet& g, const GroundAtom& head) {
    auto id = g.atoms().id(head.predicate, head.args);
    if (!id || !g.atoms().is_defined(*id)) throw SymbolNotInterpreted("'" + head.predicate + "' is not a defined atom");
    return *id;
}

}  // namespace

bool eval_body(const GroundRuleSet& g, const GroundAtom& head, const Structure& i) {
    AtomValues v = g.read(i);
    return g.eval(g.body(defined_id(g, head)), v, v);
}

bool eval_body_pair(const GroundRuleSet& g, const GroundAtom& head, const Structure& i, const Structure& j) {
    AtomValues lower = g.read(i);
    AtomValues upper = g.read(j);
    return g.eval(g.body(defined_id(g, head)), lower, upper);
}

// Dependency graph ---------------------------------------------------------------

DependencyGraph::DependencyGraph(std::size_t atom_count, std::vector<DependencyEdge> edges)
    : edges_(std::move(edges)), successors_(atom_count) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const DependencyEdge& e : edges_) {
        auto& s = successors_[e.from];
        if (s.empty() || s.back() != e.to) s.push_back(e.to);
    }
}

bool DependencyGraph::has_self_edge(AtomId a) const {
    const auto& s = successors_[a];
    return std::binary_search(s.begin(), s.end(), a);
}

DependencyGraph dependency_graph(const GroundRuleSet& g) {
    std::vector<DependencyEdge> edges;
    std::vector<NodeId> stack;
    for (AtomId head = 0; head < g.atoms().defined_count(); ++head) {
        stack.assign(1, g.body(head));
        while (!stack.empty()) {
            const GroundNode& n = g.node(stack.back());
            stack.pop_back();
            if (n.kind == NodeKind::Atom) edges.push_back({n.atom, head, n.positive});
            for (std::uint32_t i = 0; i < n.count; ++i) stack.push_back(g.child(n, i));
        }
    }
    return DependencyGraph(g.atoms().size(), std::move(edges));
}

SccDecomposition scc_preorder(const DependencyGraph& dg) {
    // Iterative Tarjan; components come out dependants-first and are reversed.
    const std::size_t n = dg.atom_count();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<AtomId> stack;
    std::vector<std::pair<AtomId, std::size_t>> call;
    std::vector<std::vector<AtomId>> found;
    std::size_t counter = 0;

    for (AtomId root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, next] = call.back();
            if (next == 0) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            const auto& succ = dg.successors(v);
            if (next < succ.size()) {
                AtomId w = succ[next++];
                if (index[w] == kUnset) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<AtomId> comp;
                AtomId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                found.push_back(std::move(comp));
            }
            const AtomId done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }

    SccDecomposition out;
    out.component.assign(n, 0);
    std::reverse(found.begin(), found.end());
    for (std::size_t c = 0; c < found.size(); ++c) {
        for (AtomId a : found[c]) out.component[a] = c;
        out.cyclic.push_back(found[c].size() > 1 || dg.has_self_edge(found[c].front()));
        out.order.push_back(c);
    }
    out.members = std::move(found);
    return out;
}

std::string edge_list(const DependencyGraph& dg, const GroundRuleSet& g) {
    std::string out;
    for (const DependencyEdge& e : dg.edges())
        out += "\"" + g.atoms().name(e.from, g.base().domain()) + "\" -> \"" +
               g.atoms().name(e.to, g.base().domain()) + "\" [" + (e.positive ? "+" : "-") + "]\n";
    return out;
}

}  // namespace idlogic
