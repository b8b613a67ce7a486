#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idlogic {

/// Coarse classification used by the command-line front end to pick an exit code.
enum class ErrorCategory { Parse, Semantic, Budget };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

struct SourceLoc {
    std::size_t line = 1;
    std::size_t col = 1;
};

class SyntaxError : public Error {
public:
    SyntaxError(SourceLoc loc, const std::string& expected)
        : Error(ErrorCategory::Parse, std::to_string(loc.line) + ":" + std::to_string(loc.col) +
                                          ": syntax error: expected " + expected),
          loc_(loc), expected_(expected) {}

    SourceLoc loc() const noexcept { return loc_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    SourceLoc loc_;
    std::string expected_;
};

#define IDLOGIC_DECLARE_ERROR(Name, Category)                                                     \
    class Name : public Error {                                                                   \
    public:                                                                                       \
        explicit Name(const std::string& what) : Error(ErrorCategory::Category, #Name ": " + what) {} \
    }

// Syntax-level errors found while resolving declarations.
IDLOGIC_DECLARE_ERROR(ArityError, Parse);
IDLOGIC_DECLARE_ERROR(UndeclaredSymbol, Parse);
IDLOGIC_DECLARE_ERROR(NameCollision, Semantic);
IDLOGIC_DECLARE_ERROR(FreeSymbolOutsideVocab, Semantic);

// Structure and lattice errors.
IDLOGIC_DECLARE_ERROR(MissingFunctionInterpretation, Semantic);
IDLOGIC_DECLARE_ERROR(SymbolNotInterpreted, Semantic);
IDLOGIC_DECLARE_ERROR(ArityMismatch, Semantic);
IDLOGIC_DECLARE_ERROR(ElementOutOfDomain, Semantic);
IDLOGIC_DECLARE_ERROR(DomainMismatch, Semantic);
IDLOGIC_DECLARE_ERROR(VocabularyError, Semantic);
IDLOGIC_DECLARE_ERROR(FreeSymbolUninterpreted, Semantic);
IDLOGIC_DECLARE_ERROR(NonMonotoneDetected, Semantic);

// Transformation errors.
IDLOGIC_DECLARE_ERROR(SplitHead, Semantic);
IDLOGIC_DECLARE_ERROR(UncoveredPredicate, Semantic);
IDLOGIC_DECLARE_ERROR(TrivialPartition, Semantic);
IDLOGIC_DECLARE_ERROR(NotAnIidSequence, Semantic);

// Resource guards.
IDLOGIC_DECLARE_ERROR(BudgetExceeded, Budget);
IDLOGIC_DECLARE_ERROR(DomainTooLarge, Budget);

#undef IDLOGIC_DECLARE_ERROR

}  // namespace idlogic
