#include "idlogic/core/structure.hpp"

#include <algorithm>
#include <sstream>

#include "idlogic/error.hpp"

namespace idlogic {

Domain::Domain(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw DomainMismatch("domain must be non-empty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, inserted] = index_.emplace(names_[i], Element{static_cast<std::uint32_t>(i)});
        if (!inserted) throw DomainMismatch("duplicate domain element '" + names_[i] + "'");
    }
}

std::shared_ptr<const Domain> Domain::range(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return std::make_shared<const Domain>(std::move(names));
}

Element Domain::element(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ElementOutOfDomain("'" + name + "' is not a domain element");
    return it->second;
}

std::vector<Element> Domain::elements() const {
    std::vector<Element> out(names_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = Element{static_cast<std::uint32_t>(i)};
    return out;
}

std::size_t tuple_count(std::size_t domain_size, std::size_t arity) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < arity; ++i) n *= domain_size;
    return n;
}

std::size_t tuple_index(const Tuple& t, std::size_t domain_size) {
    std::size_t idx = 0;
    for (Element e : t) idx = idx * domain_size + e.id;
    return idx;
}

Tuple tuple_at(std::size_t index, std::size_t domain_size, std::size_t arity) {
    Tuple t(arity);
    for (std::size_t i = arity; i-- > 0;) {
        t[i] = Element{static_cast<std::uint32_t>(index % domain_size)};
        index /= domain_size;
    }
    return t;
}

Relation::Relation(std::size_t domain_size, std::size_t arity, bool full)
    : domain_size_(domain_size), arity_(arity), bits_(tuple_count(domain_size, arity), full) {}

Relation Relation::from_tuples(std::size_t domain_size, std::size_t arity, const TupleSet& tuples) {
    Relation r(domain_size, arity);
    for (const Tuple& t : tuples) {
        if (t.size() != arity)
            throw ArityMismatch("tuple of length " + std::to_string(t.size()) +
                                " for relation of arity " + std::to_string(arity));
        for (Element e : t)
            if (e.id >= domain_size)
                throw ElementOutOfDomain("element id " + std::to_string(e.id) +
                                         " outside domain of size " + std::to_string(domain_size));
        r.insert(t);
    }
    return r;
}

std::size_t Relation::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

TupleSet Relation::tuples() const {
    TupleSet out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(tuple_at(i, domain_size_, arity_));
    return out;
}

bool Relation::subset_of(const Relation& other) const {
    if (bits_.size() != other.bits_.size()) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other.bits_[i]) return false;
    return true;
}

FunctionTable::FunctionTable(std::size_t domain_size, std::size_t arity, std::vector<Element> values)
    : domain_size_(domain_size), arity_(arity), values_(std::move(values)) {
    if (values_.size() != tuple_count(domain_size, arity))
        throw ArityMismatch("function table has " + std::to_string(values_.size()) +
                            " entries, expected " + std::to_string(tuple_count(domain_size, arity)));
    for (Element e : values_)
        if (e.id >= domain_size)
            throw ElementOutOfDomain("function value outside domain");
}

Structure::Structure(std::shared_ptr<const Domain> domain) : domain_(std::move(domain)) {
    if (!domain_) throw DomainMismatch("structure needs a domain");
}

const Relation& Structure::relation(const std::string& name) const {
    auto it = rels_.find(name);
    if (it == rels_.end())
        throw SymbolNotInterpreted("predicate '" + name + "' is not interpreted");
    return *it->second;
}

const FunctionTable& Structure::function(const std::string& name) const {
    auto it = funcs_.find(name);
    if (it == funcs_.end())
        throw MissingFunctionInterpretation("function '" + name + "' is not interpreted");
    return *it->second;
}

Structure Structure::with_relation(const std::string& name, Relation value) const {
    if (value.domain_size() != domain_->size())
        throw DomainMismatch("relation for '" + name + "' built over a different domain");
    if (const Symbol* s = vocab_.find(name)) {
        if (!s->is_predicate() || s->arity != value.arity())
            throw ArityMismatch("'" + name + "' declared with arity " + std::to_string(s->arity) +
                                ", got relation of arity " + std::to_string(value.arity()));
    }
    Structure out = *this;
    out.vocab_.add_predicate(name, value.arity());
    out.rels_[name] = std::make_shared<const Relation>(std::move(value));
    return out;
}

Structure Structure::with_function(const std::string& name, FunctionTable value) const {
    if (value.domain_size() != domain_->size())
        throw DomainMismatch("function table for '" + name + "' built over a different domain");
    Structure out = *this;
    if (const Symbol* s = vocab_.find(name)) {
        if (!s->is_function() || s->arity != value.arity())
            throw ArityMismatch("'" + name + "' declared with arity " + std::to_string(s->arity));
    }
    out.vocab_.add_function(name, value.arity());
    out.funcs_[name] = std::make_shared<const FunctionTable>(std::move(value));
    return out;
}

Structure Structure::without(const std::vector<std::string>& names) const {
    Structure out = *this;
    out.vocab_ = vocab_.without(names);
    for (const auto& n : names) {
        out.rels_.erase(n);
        out.funcs_.erase(n);
    }
    return out;
}

std::vector<GroundAtom> Structure::true_atoms() const {
    std::vector<GroundAtom> out;
    for (const auto& [name, rel] : rels_)
        for (Tuple& t : rel->tuples()) out.push_back({name, std::move(t)});
    return out;
}

std::string Structure::atoms_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const GroundAtom& a : true_atoms()) {
        if (!first) os << ", ";
        first = false;
        os << a.predicate;
        if (!a.args.empty()) {
            os << '(';
            for (std::size_t i = 0; i < a.args.size(); ++i) {
                if (i) os << ',';
                os << domain_->name(a.args[i]);
            }
            os << ')';
        }
    }
    os << '}';
    return os.str();
}

bool same_domain(const Structure& a, const Structure& b) {
    return a.domain_ptr() == b.domain_ptr() || a.domain() == b.domain();
}

bool operator==(const Structure& a, const Structure& b) {
    if (!same_domain(a, b) || !(a.vocab_ == b.vocab_)) return false;
    for (const auto& [name, rel] : a.rels_)
        if (rel != b.rels_.at(name) && !(*rel == *b.rels_.at(name))) return false;
    for (const auto& [name, fn] : a.funcs_)
        if (fn != b.funcs_.at(name) && !(*fn == *b.funcs_.at(name))) return false;
    return true;
}

bool leq(const Structure& i, const Structure& j) {
    if (!same_domain(i, j) || !(i.vocab() == j.vocab())) return false;
    for (const Symbol& s : i.vocab().symbols()) {
        if (s.is_function()) {
            if (!(i.function(s.name) == j.function(s.name))) return false;
        } else if (!i.relation(s.name).subset_of(j.relation(s.name))) {
            return false;
        }
    }
    return true;
}

namespace {
template <typename Combine>
Structure combine(const Structure& i, const Structure& j, Combine op, const char* what) {
    if (!same_domain(i, j) || !(i.vocab() == j.vocab()))
        throw DomainMismatch(std::string(what) + " of structures over different vocabularies or domains");
    Structure out = i;
    for (const Symbol& s : i.vocab().predicates()) {
        const Relation& a = i.relation(s.name);
        const Relation& b = j.relation(s.name);
        if (a == b) continue;
        Relation r = a;
        for (std::size_t k = 0; k < r.capacity(); ++k) r.set(k, op(a.test(k), b.test(k)));
        out = out.with_relation(s.name, std::move(r));
    }
    for (const Symbol& s : i.vocab().functions())
        if (!(i.function(s.name) == j.function(s.name)))
            throw DomainMismatch(std::string(what) + " of structures with different function values");
    return out;
}
}  // namespace

Structure join(const Structure& i, const Structure& j) {
    return combine(i, j, [](bool a, bool b) { return a || b; }, "join");
}

Structure meet(const Structure& i, const Structure& j) {
    return combine(i, j, [](bool a, bool b) { return a && b; }, "meet");
}

Structure restrict(const Structure& i, const Vocabulary& sub) {
    std::vector<std::string> drop;
    for (const Symbol& s : sub.symbols()) {
        const Symbol* have = i.vocab().find(s.name);
        if (!have || !(*have == s))
            throw SymbolNotInterpreted("'" + s.name + "' is not interpreted by the structure");
    }
    for (const Symbol& s : i.vocab().symbols())
        if (!sub.contains(s.name)) drop.push_back(s.name);
    return i.without(drop);
}

Structure extend(const Structure& i, const std::map<std::string, Relation>& assignments) {
    Structure out = i;
    for (const auto& [name, rel] : assignments) out = out.with_relation(name, rel);
    return out;
}

Structure extend(const Structure& i, const std::map<std::string, TupleSet>& assignments) {
    std::map<std::string, Relation> rels;
    for (const auto& [name, tuples] : assignments) {
        std::size_t arity = 0;
        if (const Symbol* s = i.vocab().find(name)) {
            if (!s->is_predicate()) throw ArityMismatch("'" + name + "' is a function symbol");
            arity = s->arity;
        } else if (!tuples.empty()) {
            arity = tuples.front().size();
        } else {
            throw ArityMismatch("cannot infer the arity of new symbol '" + name + "' from an empty tuple list");
        }
        rels.emplace(name, Relation::from_tuples(i.domain().size(), arity, tuples));
    }
    return extend(i, rels);
}

}  // namespace idlogic
