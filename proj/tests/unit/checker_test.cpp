#include <gtest/gtest.h>

#include "idlogic/checker/checker.hpp"
#include "idlogic/engine/engine.hpp"
#include "support/builders.hpp"

using namespace idlogic;
using namespace idlogic::testing;

namespace {

const char* kTwoDefinitions = R"(
pred Human/1, Male/1, Female/1, Adult/1, Child/1.
{ Human(x) <- Male(x).
  Human(x) <- Female(x). }
{ Human(x) <- Adult(x).
  Human(x) <- Child(x). }
)";

const char* kOneDefinition = R"(
pred Human/1, Male/1, Female/1, Adult/1, Child/1.
{ Human(x) <- Male(x).
  Human(x) <- Female(x).
  Human(x) <- Adult(x).
  Human(x) <- Child(x). }
)";

const std::set<std::string> kPeople{"Human", "Male", "Female", "Adult", "Child"};

Formula formula(const Theory& th, const std::string& text) { return parse_formula(text, th.vocab); }

}  // namespace

TEST(Checker, EvenDefinitionWithAtomOnChain) {
    const Theory th = parse_theory(kEvenSource);
    const Structure s = chain(4).with_relation("E", unary(5, {0, 2, 4}));
    const Formula phi = conj(th.axioms[0], formula(th, "E(s(s(0)))"));
    EXPECT_TRUE(satisfies(s, phi));
    EXPECT_FALSE(satisfies(chain(4).with_relation("E", unary(5, {0, 2})), phi));
    EXPECT_FALSE(satisfies(s, conj(th.axioms[0], formula(th, "E(s(0))"))));
}

TEST(Checker, Constants) {
    EXPECT_TRUE(satisfies(propositional(), truth(true)));
    EXPECT_FALSE(satisfies(propositional(), truth(false)));
}

TEST(Checker, Connectives) {
    const Theory th = parse_theory("pred P, Q.");
    const Structure s = propositional({"P", "Q"}, {"P"});
    EXPECT_TRUE(satisfies(s, formula(th, "P & ~Q")));
    EXPECT_TRUE(satisfies(s, formula(th, "Q | P")));
    EXPECT_FALSE(satisfies(s, formula(th, "P => Q")));
    EXPECT_TRUE(satisfies(s, formula(th, "Q => P")));
    EXPECT_FALSE(satisfies(s, formula(th, "P <=> Q")));
    EXPECT_TRUE(satisfies(s, formula(th, "~P <=> Q")));
}

TEST(Checker, QuantifiersAndEquality) {
    const Theory th = parse_theory("func s/1. const 0.");
    const Structure c = chain(3);
    EXPECT_TRUE(satisfies(c, formula(th, "!x: ?y: s(x) = y")));
    EXPECT_TRUE(satisfies(c, formula(th, "?x: s(x) = x")));
    EXPECT_TRUE(satisfies(c, formula(th, "!x: ~(s(x) = 0)")));
    EXPECT_FALSE(satisfies(c, formula(th, "!x: ?y: s(y) = x")));
    EXPECT_TRUE(satisfies(c, formula(th, "!x y: (x = y => s(x) = s(y))")));
}

TEST(Checker, AbbreviationsAgreeWithExpansions) {
    const Theory th = parse_theory("pred P/1, Q/1.");
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"!x: (P(x) => Q(x))", "!x: (~P(x) | Q(x))"},
        {"!x: (P(x) <=> Q(x))", "!x: ((P(x) => Q(x)) & (Q(x) => P(x)))"},
        {"!x: P(x)", "~?x: ~P(x)"},
        {"?x y: (P(x) & Q(y) & x ~= y)", "?x: ?y: (P(x) & Q(y) & ~(x = y))"},
    };
    const Structure base(Domain::range(2));
    for (const auto& [lhs, rhs] : pairs) {
        const Formula a = formula(th, lhs);
        const Formula b = formula(th, rhs);
        const ExtensionLattice lat(base, th.vocab);
        for (ExtensionStream st = enumerate_extensions(lat); auto s = st.next();)
            EXPECT_EQ(satisfies(*s, a), satisfies(*s, b)) << lhs << " vs " << rhs << " at " << s->atoms_string();
    }
}

TEST(Checker, DefinitionClauseAgreesWithEngine) {
    InstanceGenerator gen(59);
    Checker checker;
    for (int k = 0; k < 60; ++k) {
        const RandomInstance inst = gen.next();
        const Formula phi = definition(inst.def);
        const ExtensionLattice lat(inst.open, inst.open.vocab().united(defined_vocabulary(inst.def)));
        for (ExtensionStream st = enumerate_extensions(lat); auto s = st.next();)
            EXPECT_EQ(checker.satisfies(*s, phi), satisfies_definition(*s, inst.def));
    }
}

TEST(Checker, NestedDefinitionsUnderConnectives) {
    const Theory th = parse_theory("pred P, Q. ~{ P <- ~P. } & ({ Q. } | P).");
    EXPECT_TRUE(satisfies_theory(propositional({"P", "Q"}, {"Q"}), th));
    EXPECT_TRUE(satisfies_theory(propositional({"P", "Q"}, {"P"}), th));
    EXPECT_FALSE(satisfies_theory(propositional({"P", "Q"}), th));
}

TEST(Checker, SecondOrderQuantifiers) {
    const Theory th = parse_theory("pred P/1. func s/1. const 0.");
    const Structure c = chain(2).with_relation("P", unary(3, {1}));
    EXPECT_TRUE(satisfies(c, formula(th, "?X/1: (X(0) & ~X(s(0)))")));
    EXPECT_FALSE(satisfies(c, formula(th, "!X/1: X(0)")));
    EXPECT_TRUE(satisfies(c, formula(th, "?X/1: !x: (X(x) <=> ~P(x))")));
    EXPECT_TRUE(satisfies(c, formula(th, "?func f/1: !x: f(x) = s(x)")));
    EXPECT_TRUE(satisfies(c, formula(th, "?func f/1: !x: ~(f(x) = 0)")));
    EXPECT_FALSE(satisfies(Structure(Domain::range(1)), parse_formula("?func f/1: !x: ~(f(x) = x)", Vocabulary{})));
    EXPECT_TRUE(satisfies(Structure(Domain::range(2)), parse_formula("?func f/1: !x: ~(f(x) = x)", Vocabulary{})));
}

TEST(Checker, MissingSymbolsAreReported) {
    const Theory th = parse_theory("pred P, Q.");
    EXPECT_THROW(satisfies(propositional({"P"}), formula(th, "P & Q")), FreeSymbolUninterpreted);
}

TEST(Checker, QuantifierBudget) {
    const Theory th = parse_theory("pred P/2.");
    CheckerOptions tight;
    tight.budget = 100;
    EXPECT_THROW(satisfies(Structure(Domain::range(3)), parse_formula("?X/2: !x: X(x, x)", Vocabulary{}), tight),
                 BudgetExceeded);
}

TEST(Theories, Examples) {
    EXPECT_TRUE(satisfies_theory(propositional(), Theory{}));
    Theory d0 = parse_theory(std::string(kDelta0Source) + "~Q.");
    EXPECT_TRUE(satisfies_theory(propositional({"P", "Q"}, {"P"}), d0));
    EXPECT_TRUE(enumerate_models(parse_theory(std::string(kDelta0Source) + "Q."), propositional(), {"P", "Q"}).empty());
    const std::vector<Structure> ms = enumerate_models(d0, propositional(), {"P", "Q"});
    ASSERT_EQ(ms.size(), 1u);
    EXPECT_EQ(ms[0].atoms_string(), "{P}");
    EXPECT_TRUE(enumerate_models(parse_theory("pred P. false."), propositional(), {"P"}).empty());
    EXPECT_EQ(enumerate_models(parse_theory("pred P, Q."), propositional(), {"P", "Q"}).size(), 4u);
}

TEST(Theories, TwoDefinitionsEntailEquality) {
    const Theory two = parse_theory(kTwoDefinitions);
    const Structure base(Domain::range(3));
    const std::vector<Structure> models = enumerate_models(two, base, kPeople);
    // Per element: all four false, or at least one of Male/Female and one of Adult/Child.
    EXPECT_EQ(models.size(), 1000u);
    const Formula union_eq = formula(two, "!x: ((Male(x) | Female(x)) <=> (Adult(x) | Child(x)))");
    for (const Structure& m : models) EXPECT_TRUE(satisfies(m, union_eq));

    const Theory one = parse_theory(kOneDefinition);
    const std::vector<Structure> single = enumerate_models(one, base, kPeople);
    EXPECT_EQ(single.size(), 4096u);
    bool counterexample = false;
    for (const Structure& m : single) counterexample = counterexample || !satisfies(m, formula(one, "!x: ((Male(x) | Female(x)) <=> (Adult(x) | Child(x)))"));
    EXPECT_TRUE(counterexample);
}

TEST(Theories, StreamCountsCandidates) {
    ModelStream stream(parse_theory("pred P, Q. P | Q."), propositional(), {"P", "Q"});
    std::size_t n = 0;
    while (stream.next()) ++n;
    EXPECT_EQ(n, 3u);
    EXPECT_EQ(stream.candidates(), 4u);
}
