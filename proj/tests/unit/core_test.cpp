#include <gtest/gtest.h>

#include "idlogic/core/lattice.hpp"
#include "idlogic/error.hpp"
#include "support/builders.hpp"

using namespace idlogic;
using namespace idlogic::testing;

namespace {

Vocabulary vocab_of(std::initializer_list<Symbol> symbols) {
    Vocabulary v;
    for (const Symbol& s : symbols) v.add(s);
    return v;
}

Symbol pred(const std::string& name, std::size_t arity) { return {name, SymbolKind::Predicate, arity}; }
Symbol func(const std::string& name, std::size_t arity) { return {name, SymbolKind::Function, arity}; }

}  // namespace

TEST(Vocabulary, NamesAreUniqueAcrossKinds) {
    Vocabulary v;
    v.add_predicate("P", 1);
    v.add_predicate("P", 1);
    EXPECT_EQ(v.size(), 1u);
    EXPECT_THROW(v.add_predicate("P", 2), VocabularyError);
    EXPECT_THROW(v.add_function("P", 1), VocabularyError);
}

TEST(Structure, ZeroAryPredicatesAreEmptyOrUnitTuple) {
    const Structure s = propositional({"P", "Q"}, {"P"});
    EXPECT_TRUE(s.holds("P", {}));
    EXPECT_FALSE(s.holds("Q", {}));
    EXPECT_EQ(s.atoms_string(), "{P}");
}

TEST(Leq, ReflexiveAndSubsetOnPredicates) {
    const Structure off = propositional({"P"});
    const Structure on = propositional({"P"}, {"P"});
    EXPECT_TRUE(leq(off, off));
    EXPECT_TRUE(leq(off, on));
    EXPECT_FALSE(leq(on, off));
}

TEST(Leq, FalseOnMismatchedVocabularyDomainOrFunctions) {
    EXPECT_FALSE(leq(propositional({"P"}), propositional({"Q"})));
    EXPECT_FALSE(leq(chain(2), chain(3)));
    EXPECT_FALSE(leq(successor_structure({1, 1}), successor_structure({0, 1})));
}

TEST(Lattice, BottomAndTopOnPropositions) {
    const ExtensionLattice lat(propositional(), vocab_of({pred("P", 0)}));
    EXPECT_EQ(bottom(lat).atoms_string(), "{}");
    EXPECT_EQ(top(lat).atoms_string(), "{P}");
}

TEST(Lattice, BottomAndTopOnChain) {
    const Structure base = chain(2);
    const ExtensionLattice lat(base, base.vocab().united(vocab_of({pred("E", 1)})));
    EXPECT_TRUE(bottom(lat).relation("E").empty());
    EXPECT_EQ(top(lat).relation("E"), unary(3, {0, 1, 2}));
    EXPECT_TRUE(leq(bottom(lat), top(lat)));
}

TEST(Lattice, MissingFunctionIsReported) {
    const Structure base = Structure(Domain::range(3)).with_constant("0", el(0));
    EXPECT_THROW(ExtensionLattice(base, vocab_of({func("s", 1), func("0", 0), pred("E", 1)})),
                 MissingFunctionInterpretation);
}

TEST(Restrict, IdentityAndDroppingPredicates) {
    const Structure s = chain(2).with_relation("E", unary(3, {0, 2})).with_relation("O", unary(3, {1}));
    EXPECT_EQ(restrict(s, s.vocab()), s);
    const Structure r = restrict(s, vocab_of({func("s", 1)}));
    EXPECT_FALSE(r.interprets("E"));
    EXPECT_FALSE(r.interprets("O"));
    EXPECT_TRUE(r.interprets("s"));
    EXPECT_THROW(restrict(s, vocab_of({pred("Q", 1)})), SymbolNotInterpreted);
}

TEST(Extend, AssignsAndOverrides) {
    const Structure base = chain(2);
    EXPECT_EQ(extend(base, std::map<std::string, Relation>{}), base);
    const Structure s = extend(base, std::map<std::string, TupleSet>{{"E", {{el(0)}, {el(2)}}}});
    EXPECT_EQ(s.relation("E"), unary(3, {0, 2}));
    const Structure t = extend(s, std::map<std::string, TupleSet>{{"E", {{el(1)}}}});
    EXPECT_EQ(t.relation("E"), unary(3, {1}));
    EXPECT_EQ(restrict(s, base.vocab()), base);
}

TEST(Extend, RejectsBadTuples) {
    const Structure s = chain(2).with_relation("E", unary(3, {}));
    EXPECT_THROW(extend(s, std::map<std::string, TupleSet>{{"E", {{el(0), el(1)}}}}), ArityMismatch);
    EXPECT_THROW(extend(s, std::map<std::string, TupleSet>{{"E", {{el(7)}}}}), ElementOutOfDomain);
}

TEST(Enumerate, CountsMatchLatticeSize) {
    {
        ExtensionStream s = enumerate_extensions(ExtensionLattice(propositional(), vocab_of({pred("P", 0)})));
        EXPECT_EQ(s.size(), 2u);
    }
    {
        const Structure base(Domain::range(2));
        ExtensionStream s = enumerate_extensions(ExtensionLattice(base, vocab_of({pred("E", 1)})));
        std::vector<Structure> all;
        while (auto x = s.next()) all.push_back(*x);
        ASSERT_EQ(all.size(), 4u);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i] == all[j]);
        EXPECT_EQ(all.front().atoms_string(), "{}");
        EXPECT_EQ(all.back().atoms_string(), "{E(0), E(1)}");
    }
}

TEST(Enumerate, BudgetExceededForLargeLattices) {
    const Structure base(Domain::range(6));
    EXPECT_THROW(enumerate_extensions(ExtensionLattice(base, vocab_of({pred("T", 2)}))), BudgetExceeded);
    try {
        enumerate_extensions(ExtensionLattice(base, vocab_of({pred("T", 2)})));
    } catch (const BudgetExceeded& e) {
        EXPECT_NE(std::string(e.what()).find("2^36"), std::string::npos) << e.what();
    }
}

TEST(Lattice, OrderIsPartialAndBoundedOnSmallLattice) {
    const Structure base(Domain::range(2));
    const ExtensionLattice lat(base, vocab_of({pred("E", 1), pred("P", 0)}));
    std::vector<Structure> all;
    for (ExtensionStream s = enumerate_extensions(lat); auto x = s.next();) all.push_back(*x);
    ASSERT_EQ(all.size(), 8u);
    for (const Structure& a : all) {
        EXPECT_TRUE(leq(bottom(lat), a));
        EXPECT_TRUE(leq(a, top(lat)));
        EXPECT_TRUE(leq(a, a));
        for (const Structure& b : all) {
            if (leq(a, b) && leq(b, a)) {
                EXPECT_EQ(a, b);
            }
            for (const Structure& c : all) {
                if (leq(a, b) && leq(b, c)) {
                    EXPECT_TRUE(leq(a, c));
                }
            }
        }
    }
}

TEST(Tuples, RowMajorIndexRoundTrips) {
    for (std::size_t i = 0; i < 27; ++i) EXPECT_EQ(tuple_index(tuple_at(i, 3, 3), 3), i);
    EXPECT_EQ(tuple_index({el(1), el(2)}, 3), 5u);
}
