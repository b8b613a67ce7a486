#include "idlogic/core/lattice.hpp"

#include "idlogic/error.hpp"

namespace idlogic {

ExtensionLattice::ExtensionLattice(Structure base, Vocabulary full_vocab)
    : base_(std::move(base)), full_vocab_(std::move(full_vocab)) {
    for (const Symbol& s : base_.vocab().symbols()) {
        const Symbol* have = full_vocab_.find(s.name);
        if (!have || !(*have == s))
            throw VocabularyError("base interprets '" + s.name + "' which is not in the lattice vocabulary");
    }
    for (const Symbol& s : full_vocab_.symbols()) {
        if (base_.interprets(s.name)) continue;
        if (s.is_function())
            throw MissingFunctionInterpretation("function '" + s.name + "/" + std::to_string(s.arity) +
                                                "' must be interpreted by the lattice base");
        free_.push_back(s);
    }
}

std::size_t ExtensionLattice::free_atom_count() const {
    std::size_t n = 0;
    for (const Symbol& s : free_) n += tuple_count(base_.domain().size(), s.arity);
    return n;
}

Structure ExtensionLattice::bottom() const {
    Structure out = base_;
    for (const Symbol& s : free_) out = out.with_relation(s.name, Relation(base_.domain().size(), s.arity, false));
    return out;
}

Structure ExtensionLattice::top() const {
    Structure out = base_;
    for (const Symbol& s : free_) out = out.with_relation(s.name, Relation(base_.domain().size(), s.arity, true));
    return out;
}

bool ExtensionLattice::contains(const Structure& s) const {
    if (!same_domain(s, base_) || !(s.vocab() == full_vocab_)) return false;
    return leq(restrict(s, base_.vocab()), base_) && leq(base_, restrict(s, base_.vocab()));
}

Structure bottom(const ExtensionLattice& lat) { return lat.bottom(); }
Structure top(const ExtensionLattice& lat) { return lat.top(); }

std::uint64_t checked_power_of_two(std::size_t exponent, std::uint64_t budget, const std::string& what) {
    if (exponent >= 64 || (std::uint64_t{1} << exponent) > budget)
        throw BudgetExceeded(what + ": 2^" + std::to_string(exponent) + " candidates exceed the budget of " +
                             std::to_string(budget));
    return std::uint64_t{1} << exponent;
}

ExtensionStream::ExtensionStream(const ExtensionLattice& lat, std::uint64_t budget)
    : base_(lat.base()), free_(lat.free_predicates()), atoms_(lat.free_atom_count()) {
    total_ = checked_power_of_two(atoms_, budget, "extension enumeration");
}

std::optional<Structure> ExtensionStream::next() {
    if (cursor_ >= total_) return std::nullopt;
    const std::size_t n = base_.domain().size();
    Structure out = base_;
    std::size_t bit = atoms_;
    for (const Symbol& s : free_) {
        Relation r(n, s.arity);
        for (std::size_t k = 0; k < r.capacity(); ++k) {
            --bit;
            r.set(k, (cursor_ >> bit) & 1U);
        }
        out = out.with_relation(s.name, std::move(r));
    }
    ++cursor_;
    return out;
}

ExtensionStream enumerate_extensions(const ExtensionLattice& lat, std::uint64_t budget) {
    return ExtensionStream(lat, budget);
}

}  // namespace idlogic
