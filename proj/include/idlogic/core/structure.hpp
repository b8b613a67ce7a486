#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "idlogic/core/vocabulary.hpp"

namespace idlogic {

/// Opaque domain element. Ids are dense, starting at zero, and their order is
/// the order in which the domain was declared.
struct Element {
    std::uint32_t id = 0;

    friend auto operator<=>(const Element&, const Element&) = default;
};

using Tuple = std::vector<Element>;
using TupleSet = std::vector<Tuple>;

/// The finite universe of a structure together with the external element names.
class Domain {
public:
    explicit Domain(std::vector<std::string> names);

    /// Domain {0, 1, ..., n-1} with decimal names.
    static std::shared_ptr<const Domain> range(std::size_t n);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Element e) const { return names_.at(e.id); }
    const std::vector<std::string>& names() const { return names_; }
    /// Throws ElementOutOfDomain for unknown names.
    Element element(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    std::vector<Element> elements() const;

    friend bool operator==(const Domain& a, const Domain& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, Element> index_;
};

/// Number of tuples of the given arity over a domain of size n (n^arity).
std::size_t tuple_count(std::size_t domain_size, std::size_t arity);
/// Row-major position of a tuple among all tuples of its arity.
std::size_t tuple_index(const Tuple& t, std::size_t domain_size);
Tuple tuple_at(std::size_t index, std::size_t domain_size, std::size_t arity);

/// Interpretation of an n-ary predicate as a bit set over all n-tuples.
class Relation {
public:
    Relation() = default;
    Relation(std::size_t domain_size, std::size_t arity, bool full = false);

    /// Throws ArityMismatch or ElementOutOfDomain on malformed tuples.
    static Relation from_tuples(std::size_t domain_size, std::size_t arity, const TupleSet& tuples);

    std::size_t arity() const { return arity_; }
    std::size_t domain_size() const { return domain_size_; }
    std::size_t capacity() const { return bits_.size(); }

    bool contains(const Tuple& t) const { return bits_[tuple_index(t, domain_size_)]; }
    bool test(std::size_t index) const { return bits_[index]; }
    void set(std::size_t index, bool value = true) { bits_[index] = value; }
    void insert(const Tuple& t) { set(tuple_index(t, domain_size_)); }

    std::size_t count() const;
    bool empty() const { return count() == 0; }
    TupleSet tuples() const;
    bool subset_of(const Relation& other) const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::size_t domain_size_ = 0;
    std::size_t arity_ = 0;
    std::vector<bool> bits_;
};

/// Total function A^n -> A stored as a row-major table.
class FunctionTable {
public:
    FunctionTable() = default;
    FunctionTable(std::size_t domain_size, std::size_t arity, std::vector<Element> values);

    static FunctionTable constant(std::size_t domain_size, Element value) {
        return FunctionTable(domain_size, 0, {value});
    }

    std::size_t arity() const { return arity_; }
    std::size_t domain_size() const { return domain_size_; }
    Element apply(const Tuple& args) const { return values_[tuple_index(args, domain_size_)]; }
    Element at(std::size_t index) const { return values_[index]; }
    const std::vector<Element>& values() const { return values_; }

    friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

private:
    std::size_t domain_size_ = 0;
    std::size_t arity_ = 0;
    std::vector<Element> values_;
};

struct GroundAtom {
    std::string predicate;
    Tuple args;

    friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

/// A finite structure: a domain plus interpretations for every symbol of its
/// vocabulary. Structures are immutable values; the with_* members return
/// modified copies and share unchanged interpretations.
class Structure {
public:
    explicit Structure(std::shared_ptr<const Domain> domain);

    const Domain& domain() const { return *domain_; }
    const std::shared_ptr<const Domain>& domain_ptr() const { return domain_; }
    const Vocabulary& vocab() const { return vocab_; }
    bool interprets(const std::string& name) const { return vocab_.contains(name); }

    const Relation& relation(const std::string& name) const;
    const FunctionTable& function(const std::string& name) const;

    bool holds(const std::string& predicate, const Tuple& args) const {
        return relation(predicate).contains(args);
    }
    bool holds(const GroundAtom& atom) const { return holds(atom.predicate, atom.args); }
    Element apply(const std::string& function, const Tuple& args) const {
        return this->function(function).apply(args);
    }

    /// Throws ArityMismatch / DomainMismatch when the relation does not fit an
    /// existing declaration or the domain.
    Structure with_relation(const std::string& name, Relation value) const;
    Structure with_function(const std::string& name, FunctionTable value) const;
    Structure with_constant(const std::string& name, Element value) const {
        return with_function(name, FunctionTable::constant(domain_->size(), value));
    }
    Structure without(const std::vector<std::string>& names) const;

    /// Sorted list of the true atoms of every predicate, e.g. "{E(0), E(2), P}".
    std::string atoms_string() const;
    std::vector<GroundAtom> true_atoms() const;

    friend bool operator==(const Structure& a, const Structure& b);

private:
    std::shared_ptr<const Domain> domain_;
    Vocabulary vocab_;
    std::map<std::string, std::shared_ptr<const Relation>> rels_;
    std::map<std::string, std::shared_ptr<const FunctionTable>> funcs_;
};

bool same_domain(const Structure& a, const Structure& b);

/// I ⊑ J: same vocabulary, domain and function values, and every relation of I
/// is a subset of the corresponding relation of J.
bool leq(const Structure& i, const Structure& j);

/// Pointwise union / intersection of relations for structures that agree on
/// everything else (the lattice join and meet).
Structure join(const Structure& i, const Structure& j);
Structure meet(const Structure& i, const Structure& j);

/// Throws SymbolNotInterpreted when sub is not contained in vocab(I).
Structure restrict(const Structure& i, const Vocabulary& sub);

Structure extend(const Structure& i, const std::map<std::string, Relation>& assignments);
/// Tuple-list form; the arity comes from the existing declaration or, for new
/// symbols, from the first tuple (empty lists for new symbols need the Relation form).
Structure extend(const Structure& i, const std::map<std::string, TupleSet>& assignments);

}  // namespace idlogic
