#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace idlogic {

enum class SymbolKind { Function, Predicate };

struct Symbol {
    std::string name;
    SymbolKind kind = SymbolKind::Predicate;
    std::size_t arity = 0;

    bool is_predicate() const { return kind == SymbolKind::Predicate; }
    bool is_function() const { return kind == SymbolKind::Function; }

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// A set of function and predicate symbols. Names are unique across both kinds
/// and iteration is in name order.
class Vocabulary {
public:
    Vocabulary() = default;

    /// Adds a symbol; re-adding an identical symbol is a no-op.
    /// Throws VocabularyError when the name is taken with a different kind or arity.
    void add(const Symbol& symbol);
    void add_predicate(const std::string& name, std::size_t arity) {
        add({name, SymbolKind::Predicate, arity});
    }
    void add_function(const std::string& name, std::size_t arity) {
        add({name, SymbolKind::Function, arity});
    }

    bool contains(const std::string& name) const { return symbols_.count(name) != 0; }
    const Symbol* find(const std::string& name) const;
    const Symbol& at(const std::string& name) const;

    std::vector<Symbol> predicates() const;
    std::vector<Symbol> functions() const;
    std::vector<Symbol> symbols() const;
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }

    bool subset_of(const Vocabulary& other) const;
    Vocabulary united(const Vocabulary& other) const;
    Vocabulary without(const std::vector<std::string>& names) const;

    friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

private:
    std::map<std::string, Symbol> symbols_;
};

}  // namespace idlogic
