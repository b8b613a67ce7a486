#include "idlogic/syntax/ast.hpp"

namespace idlogic {

namespace {
Formula make(decltype(FormulaNode::v) v) {
    return Formula(std::make_shared<const FormulaNode>(FormulaNode{std::move(v)}));
}

struct NodeEqual {
    bool operator()(const AtomNode& a, const AtomNode& b) const {
        return a.predicate == b.predicate && a.args == b.args;
    }
    bool operator()(const EqualNode& a, const EqualNode& b) const { return a.lhs == b.lhs && a.rhs == b.rhs; }
    bool operator()(const TruthNode& a, const TruthNode& b) const { return a.value == b.value; }
    bool operator()(const NotNode& a, const NotNode& b) const { return a.sub == b.sub; }
    bool operator()(const BinaryNode& a, const BinaryNode& b) const {
        return a.op == b.op && a.lhs == b.lhs && a.rhs == b.rhs;
    }
    bool operator()(const QuantNode& a, const QuantNode& b) const {
        return a.quantifier == b.quantifier && a.kind == b.kind && a.name == b.name && a.arity == b.arity &&
               a.body == b.body;
    }
    bool operator()(const DefNode& a, const DefNode& b) const { return *a.definition == *b.definition; }
    template <typename A, typename B>
    bool operator()(const A&, const B&) const {
        return false;
    }
};
}  // namespace

bool operator==(const Formula& a, const Formula& b) {
    if (a.get() == b.get()) return true;
    if (!a.valid() || !b.valid()) return false;
    return std::visit(NodeEqual{}, a.node().v, b.node().v);
}

Formula atom(std::string predicate, std::vector<Term> args) {
    return make(AtomNode{std::move(predicate), std::move(args)});
}
Formula equal(Term lhs, Term rhs) { return make(EqualNode{std::move(lhs), std::move(rhs)}); }
Formula truth(bool value) { return make(TruthNode{value}); }
Formula negate(Formula sub) { return make(NotNode{std::move(sub)}); }
Formula binary(Connective op, Formula lhs, Formula rhs) {
    return make(BinaryNode{op, std::move(lhs), std::move(rhs)});
}
Formula conj(Formula lhs, Formula rhs) { return binary(Connective::And, std::move(lhs), std::move(rhs)); }
Formula disj(Formula lhs, Formula rhs) { return binary(Connective::Or, std::move(lhs), std::move(rhs)); }
Formula implies(Formula lhs, Formula rhs) {
    return binary(Connective::Implies, std::move(lhs), std::move(rhs));
}
Formula iff(Formula lhs, Formula rhs) { return binary(Connective::Iff, std::move(lhs), std::move(rhs)); }

Formula conj(const std::vector<Formula>& parts) {
    if (parts.empty()) return truth(true);
    Formula out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out = conj(out, parts[i]);
    return out;
}

Formula disj(const std::vector<Formula>& parts) {
    if (parts.empty()) return truth(false);
    Formula out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out = disj(out, parts[i]);
    return out;
}

Formula quantify(Quantifier q, BinderKind kind, std::string name, std::size_t arity, Formula body) {
    return make(QuantNode{q, kind, std::move(name), arity, std::move(body)});
}

Formula exists(std::string var, Formula body) {
    return quantify(Quantifier::Exists, BinderKind::Object, std::move(var), 0, std::move(body));
}

Formula forall(std::string var, Formula body) {
    return quantify(Quantifier::Forall, BinderKind::Object, std::move(var), 0, std::move(body));
}

Formula exists(const std::vector<std::string>& vars, Formula body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
    return body;
}

Formula forall(const std::vector<std::string>& vars, Formula body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
    return body;
}

Formula definition(Definition def) {
    return make(DefNode{std::make_shared<const Definition>(std::move(def))});
}

}  // namespace idlogic
