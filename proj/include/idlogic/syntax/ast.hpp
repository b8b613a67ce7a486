#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "idlogic/core/vocabulary.hpp"
#include "idlogic/error.hpp"

namespace idlogic {

/// Object-level term: a bound variable or an application of a function symbol
/// (constants are 0-ary applications).
struct Term {
    enum class Kind { Var, Apply };

    Kind kind = Kind::Var;
    std::string name;
    std::vector<Term> args;

    static Term var(std::string name) { return Term{Kind::Var, std::move(name), {}}; }
    static Term apply(std::string name, std::vector<Term> args = {}) {
        return Term{Kind::Apply, std::move(name), std::move(args)};
    }

    bool is_var() const { return kind == Kind::Var; }

    friend bool operator==(const Term&, const Term&) = default;
};

enum class Connective { And, Or, Implies, Iff };
enum class Quantifier { Exists, Forall };
/// What a quantifier ranges over.
enum class BinderKind { Object, Function, Predicate };

struct FormulaNode;
struct Definition;

/// Immutable, shared formula handle. Copies are cheap.
class Formula {
public:
    Formula() = default;
    explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

    const FormulaNode& node() const { return *node_; }
    bool valid() const { return node_ != nullptr; }
    const FormulaNode* get() const { return node_.get(); }

    template <typename T>
    const T* as() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    std::shared_ptr<const FormulaNode> node_;
};

struct AtomNode {
    std::string predicate;
    std::vector<Term> args;
};
struct EqualNode {
    Term lhs;
    Term rhs;
};
struct TruthNode {
    bool value = true;
};
struct NotNode {
    Formula sub;
};
struct BinaryNode {
    Connective op = Connective::And;
    Formula lhs;
    Formula rhs;
};
struct QuantNode {
    Quantifier quantifier = Quantifier::Exists;
    BinderKind kind = BinderKind::Object;
    std::string name;
    std::size_t arity = 0;  // for function and predicate binders
    Formula body;
};
struct DefNode {
    std::shared_ptr<const Definition> definition;
};

struct FormulaNode {
    std::variant<AtomNode, EqualNode, TruthNode, NotNode, BinaryNode, QuantNode, DefNode> v;
};

template <typename T>
const T* Formula::as() const {
    return std::get_if<T>(&node_->v);
}

/// ∀ vars (head(head_args) ← body). The body is first-order (no nested definitions).
struct Rule {
    std::vector<std::string> vars;
    std::string head;
    std::vector<Term> head_args;
    Formula body;
    SourceLoc loc{};

    friend bool operator==(const Rule& a, const Rule& b) {
        return a.vars == b.vars && a.head == b.head && a.head_args == b.head_args && a.body == b.body;
    }
};

struct Definition {
    std::vector<Rule> rules;

    friend bool operator==(const Definition&, const Definition&) = default;
};

struct Theory {
    Vocabulary vocab;
    std::vector<Formula> axioms;
};

// Constructors. Binary helpers over vectors fold left; an empty conjunction is
// true and an empty disjunction is false.
Formula atom(std::string predicate, std::vector<Term> args = {});
Formula equal(Term lhs, Term rhs);
Formula truth(bool value);
Formula negate(Formula sub);
Formula binary(Connective op, Formula lhs, Formula rhs);
Formula conj(Formula lhs, Formula rhs);
Formula disj(Formula lhs, Formula rhs);
Formula implies(Formula lhs, Formula rhs);
Formula iff(Formula lhs, Formula rhs);
Formula conj(const std::vector<Formula>& parts);
Formula disj(const std::vector<Formula>& parts);
Formula quantify(Quantifier q, BinderKind kind, std::string name, std::size_t arity, Formula body);
Formula exists(std::string var, Formula body);
Formula forall(std::string var, Formula body);
Formula exists(const std::vector<std::string>& vars, Formula body);
Formula forall(const std::vector<std::string>& vars, Formula body);
Formula definition(Definition def);

}  // namespace idlogic
