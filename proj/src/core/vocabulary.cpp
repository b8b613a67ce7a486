#include "idlogic/core/vocabulary.hpp"

#include <algorithm>

#include "idlogic/error.hpp"

namespace idlogic {

namespace {
const char* kind_name(SymbolKind kind) {
    return kind == SymbolKind::Function ? "function" : "predicate";
}
}  // namespace

void Vocabulary::add(const Symbol& symbol) {
    auto [it, inserted] = symbols_.emplace(symbol.name, symbol);
    if (!inserted && !(it->second == symbol)) {
        throw VocabularyError("symbol '" + symbol.name + "' already declared as " +
                              kind_name(it->second.kind) + "/" +
                              std::to_string(it->second.arity));
    }
}

const Symbol* Vocabulary::find(const std::string& name) const {
    auto it = symbols_.find(name);
    return it == symbols_.end() ? nullptr : &it->second;
}

const Symbol& Vocabulary::at(const std::string& name) const {
    if (const Symbol* s = find(name)) return *s;
    throw SymbolNotInterpreted("symbol '" + name + "' is not in the vocabulary");
}

std::vector<Symbol> Vocabulary::predicates() const {
    std::vector<Symbol> out;
    for (const auto& [name, s] : symbols_)
        if (s.is_predicate()) out.push_back(s);
    return out;
}

std::vector<Symbol> Vocabulary::functions() const {
    std::vector<Symbol> out;
    for (const auto& [name, s] : symbols_)
        if (s.is_function()) out.push_back(s);
    return out;
}

std::vector<Symbol> Vocabulary::symbols() const {
    std::vector<Symbol> out;
    out.reserve(symbols_.size());
    for (const auto& [name, s] : symbols_) out.push_back(s);
    return out;
}

bool Vocabulary::subset_of(const Vocabulary& other) const {
    return std::all_of(symbols_.begin(), symbols_.end(), [&](const auto& entry) {
        const Symbol* s = other.find(entry.first);
        return s && *s == entry.second;
    });
}

Vocabulary Vocabulary::united(const Vocabulary& other) const {
    Vocabulary out = *this;
    for (const auto& [name, s] : other.symbols_) out.add(s);
    return out;
}

Vocabulary Vocabulary::without(const std::vector<std::string>& names) const {
    Vocabulary out = *this;
    for (const auto& n : names) out.symbols_.erase(n);
    return out;
}

}  // namespace idlogic
