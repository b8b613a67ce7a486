#include <gtest/gtest.h>

#include "idlogic/engine/engine.hpp"
#include "support/builders.hpp"

using namespace idlogic;
using namespace idlogic::testing;

namespace {

std::vector<Structure> lattice_of(const Definition& def, const Structure& open) {
    const ExtensionLattice lat(open, open.vocab().united(defined_vocabulary(def)));
    std::vector<Structure> out;
    for (ExtensionStream s = enumerate_extensions(lat); auto x = s.next();) out.push_back(*x);
    return out;
}

Structure two_cycle_graph() {
    return Structure(Domain::range(2)).with_relation("G", binary_relation(2, {{0, 1}, {1, 0}}));
}

}  // namespace

// Γ and T″ -----------------------------------------------------------------------------

TEST(Gamma, Delta0ReachesFixpointFromEmpty) {
    const GroundRuleSet g = ground_definition(definition_of(kDelta0Source), propositional());
    const Structure once = gamma(g, propositional({"P", "Q"}));
    EXPECT_EQ(once.atoms_string(), "{P, Q}");
    EXPECT_EQ(gamma(g, once), once);
}

TEST(Gamma, EvenFromEmptyDerivesEverything) {
    const GroundRuleSet g = ground_definition(definition_of(kEvenSource), chain(2));
    EXPECT_EQ(gamma(g, chain(2).with_relation("E", unary(3, {}))).relation("E"), unary(3, {0, 1, 2}));
}

TEST(Gamma, MonotoneForPositiveDefinition) {
    const Definition def = definition_of(kClosureSource);
    const GroundRuleSet g = ground_definition(def, two_cycle_graph());
    const std::vector<Structure> all = lattice_of(def, two_cycle_graph());
    for (const Structure& a : all)
        for (const Structure& b : all)
            if (leq(a, b)) {
                EXPECT_TRUE(leq(gamma(g, a), gamma(g, b)));
            }
}

TEST(TPP, DiagonalIsGammaAndMonotonicity) {
    InstanceGenerator gen(41);
    for (int k = 0; k < 60; ++k) {
        const RandomInstance inst = gen.next();
        const GroundRuleSet g = ground_definition(inst.def, inst.open);
        const std::vector<Structure> all = lattice_of(inst.def, inst.open);
        if (all.size() > 64) continue;
        for (const Structure& i : all) {
            EXPECT_EQ(t_pp(g, i, i), gamma(g, i));
            for (const Structure& j : all) {
                if (!leq(i, j)) continue;
                for (const Structure& x : all) {
                    EXPECT_TRUE(leq(t_pp(g, i, x), t_pp(g, j, x)));  // monotone in the first argument
                    EXPECT_TRUE(leq(t_pp(g, x, j), t_pp(g, x, i)));  // anti-monotone in the second
                }
            }
        }
    }
}

TEST(TPP, EvenIgnoresFirstArgument) {
    const Definition def = definition_of(kEvenSource);
    const GroundRuleSet g = ground_definition(def, chain(3));
    const std::vector<Structure> all = lattice_of(def, chain(3));
    for (const Structure& i : all)
        for (const Structure& j : all) EXPECT_EQ(t_pp(g, i, j), gamma(g, j));
}

TEST(TPP, ApproximatesGamma) {
    InstanceGenerator gen(43);
    for (int k = 0; k < 80; ++k) {
        const RandomInstance inst = gen.next();
        const GroundRuleSet g = ground_definition(inst.def, inst.open);
        const std::vector<Structure> all = lattice_of(inst.def, inst.open);
        std::mt19937_64& rng = gen.rng();
        for (int t = 0; t < 50; ++t) {
            const Structure& a = all[rng() % all.size()];
            const Structure& b = all[rng() % all.size()];
            const Structure& c = all[rng() % all.size()];
            if (!(leq(a, b) && leq(b, c))) continue;
            EXPECT_TRUE(leq(t_pp(g, a, c), gamma(g, b)));
            EXPECT_TRUE(leq(gamma(g, b), t_pp(g, c, a)));
        }
    }
}

// Least fixpoints ------------------------------------------------------------------------

TEST(Lfp, ConstantIdentityAndClosure) {
    Vocabulary v;
    v.add_predicate("P", 0);
    const ExtensionLattice lat(propositional(), v);
    const Structure on = propositional({"P"}, {"P"});
    EXPECT_EQ(lfp_monotone([&](const Structure&) { return on; }, lat), on);
    EXPECT_EQ(lfp_monotone([](const Structure& s) { return s; }, lat), bottom(lat));

    const Definition tc = definition_of(kClosureSource);
    const Structure graph =
        Structure(Domain::range(3)).with_relation("G", binary_relation(3, {{0, 1}, {1, 2}}));
    const GroundRuleSet g = ground_definition(tc, graph);
    const Structure lfp = lfp_monotone([&](const Structure& s) { return gamma(g, s); },
                                       ExtensionLattice(graph, graph.vocab().united(defined_vocabulary(tc))));
    EXPECT_EQ(lfp.relation("T"), binary_relation(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST(Lfp, DetectsShrinkingStep) {
    Vocabulary v;
    v.add_predicate("P", 0);
    const ExtensionLattice lat(propositional(), v);
    const auto flip = [](const Structure& s) { return propositional({"P"}, s.holds("P", {}) ? std::set<std::string>{} : std::set<std::string>{"P"}); };
    EXPECT_THROW(lfp_monotone(flip, lat), NonMonotoneDetected);
}

// Stable operator and well-founded pair ---------------------------------------------------

TEST(Stable, Delta0Steps) {
    const GroundRuleSet g = ground_definition(definition_of(kDelta0Source), propositional());
    EXPECT_EQ(stable(g, propositional({"P", "Q"})).atoms_string(), "{P, Q}");
    EXPECT_EQ(stable(g, propositional({"P", "Q"}, {"P", "Q"})).atoms_string(), "{P}");
    EXPECT_EQ(stable(g, propositional({"P", "Q"}, {"P"})).atoms_string(), "{P}");
}

TEST(WellFounded, SmallDefinitions) {
    const WfPair d0 = well_founded_pair(definition_of(kDelta0Source), propositional());
    EXPECT_EQ(d0.lb.atoms_string(), "{P}");
    EXPECT_EQ(d0.ub.atoms_string(), "{P}");
    EXPECT_TRUE(d0.total);

    const WfPair liar = well_founded_pair(definition_of("pred P. { P <- ~P. }"), propositional());
    EXPECT_EQ(liar.lb.atoms_string(), "{}");
    EXPECT_EQ(liar.ub.atoms_string(), "{P}");
    EXPECT_FALSE(liar.total);

    const WfPair choice = well_founded_pair(definition_of("pred P, Q. { P <- ~Q. Q <- ~P. }"), propositional());
    EXPECT_EQ(choice.lb.atoms_string(), "{}");
    EXPECT_EQ(choice.ub.atoms_string(), "{P, Q}");

    const WfPair small = well_founded_pair(definition_of(kEvenSource), successor_structure({1, 1}));
    EXPECT_EQ(small.lb.relation("E"), unary(2, {0}));
    EXPECT_EQ(small.ub.relation("E"), unary(2, {0, 1}));
}

TEST(WellFounded, TraceText) {
    const WfPair p = well_founded_pair(definition_of(kDelta0Source), propositional(), true);
    EXPECT_EQ(trace_string(p),
              "stage 0: I = {}, J = {P, Q}\nstage 1: I = {P}, J = {P, Q}\nstage 2: I = {P}, J = {P}\n");
    EXPECT_TRUE(well_founded_pair(definition_of(kDelta0Source), propositional()).trace.empty());
}

TEST(WellFounded, PairIsMaximalOscillatingPair) {
    InstanceGenerator gen(47);
    for (int k = 0; k < 80; ++k) {
        const RandomInstance inst = gen.next();
        const GroundRuleSet g = ground_definition(inst.def, inst.open);
        const WfPair p = well_founded_pair(g, inst.open);
        EXPECT_TRUE(leq(p.lb, p.ub));
        EXPECT_EQ(stable(g, p.lb), p.ub);
        EXPECT_EQ(stable(g, p.ub), p.lb);
        EXPECT_EQ(p.total, p.lb == p.ub);
        EXPECT_EQ(restrict(p.lb, inst.open.vocab()), inst.open);
        for (const Structure& x : lattice_of(inst.def, inst.open)) {
            const Structure y = stable(g, x);
            if (stable(g, y) == x) {
                EXPECT_TRUE(leq(p.lb, x));
                EXPECT_TRUE(leq(y, p.ub));
            }
        }
    }
}

// Totality and extensions ------------------------------------------------------------------

TEST(Extension, EvenOnChains) {
    const Definition def = definition_of(kEvenSource);
    const auto even = extension(def, chain(20));
    ASSERT_TRUE(std::holds_alternative<Structure>(even));
    EXPECT_EQ(std::get<Structure>(even).relation("E"), unary(21, evens_up_to(20)));

    const auto odd = extension(def, chain(21));
    ASSERT_TRUE(std::holds_alternative<NotTotal>(odd));
    const WfPair& p = std::get<NotTotal>(odd).pair;
    std::size_t differing = 0;
    for (std::size_t k = 0; k < 22; ++k)
        if (p.lb.relation("E").test(k) != p.ub.relation("E").test(k)) {
            ++differing;
            EXPECT_EQ(k, 21u);
        }
    EXPECT_EQ(differing, 1u);
}

TEST(Extension, PositiveDefinitionsAreTotalAndLeastFixpoints) {
    RandomOptions opts;
    opts.allow_negation = false;
    InstanceGenerator gen(53, opts);
    for (int k = 0; k < 100; ++k) {
        const RandomInstance inst = gen.next();
        if (!is_positive(inst.def)) continue;  // ∀ can still hide nothing; guard anyway
        EXPECT_TRUE(is_total(inst.def, inst.open));
        const GroundRuleSet g = ground_definition(inst.def, inst.open);
        const ExtensionLattice lat(inst.open, inst.open.vocab().united(defined_vocabulary(inst.def)));
        const auto ext = extension(inst.def, inst.open);
        ASSERT_TRUE(std::holds_alternative<Structure>(ext));
        EXPECT_EQ(std::get<Structure>(ext), lfp_monotone([&](const Structure& s) { return gamma(g, s); }, lat));
    }
}

TEST(Totality, QuantifiesOverMissingOpenPredicates) {
    const Definition def = definition_of("pred P, Q. { P <- ~P & Q. }");
    EXPECT_FALSE(is_total(def, propositional()));
    EXPECT_TRUE(is_total(def, propositional({"Q"})));
    EXPECT_FALSE(is_total(def, propositional({"Q"}, {"Q"})));
    EngineOptions bottom_only;
    bottom_only.completions = Completions::BottomOnly;
    EXPECT_TRUE(is_total(def, propositional(), bottom_only));
}

TEST(Totality, BudgetGuardsCompletions) {
    const Definition def = definition_of("pred P/1, R/2. { P(x) <- ?y: R(x, y). }");
    EXPECT_THROW(is_total(def, Structure(Domain::range(6))), BudgetExceeded);
}

TEST(SatisfiesDefinition, Examples) {
    const Definition d0 = definition_of(kDelta0Source);
    EXPECT_TRUE(satisfies_definition(propositional({"P", "Q"}, {"P"}), d0));
    EXPECT_FALSE(satisfies_definition(propositional({"P", "Q"}), d0));

    const Definition cycle = definition_of("pred P, Q. { P <- Q. Q <- P. }");
    EXPECT_FALSE(satisfies_definition(propositional({"P", "Q"}, {"P", "Q"}), cycle));
    EXPECT_TRUE(satisfies_definition(propositional({"P", "Q"}), cycle));

    const Definition liar = definition_of("pred P. { P <- ~P. }");
    EXPECT_FALSE(satisfies_definition(propositional({"P"}), liar));
    EXPECT_FALSE(satisfies_definition(propositional({"P"}, {"P"}), liar));
}

// Inflationary iteration -------------------------------------------------------------------

TEST(Inflationary, EvenBodyFillsTheChain) {
    const Definition one_rule =
        definition_of("pred E/1. func s/1. const 0. { E(x) <- x = 0 | ?y: (x = s(y) & ~E(y)). }");
    const Formula phi = one_rule.rules[0].body;
    EXPECT_EQ(inflationary_fixpoint(phi, "E", {"x"}, chain(10)), Relation(11, 1, true));
    EXPECT_EQ(inflationary_fixpoint(truth(false), "E", {"x"}, chain(10)), Relation(11, 1));
}

TEST(Inflationary, PositiveBodyGivesLeastFixpoint) {
    const Definition tc = definition_of(kClosureSource);
    const Structure graph =
        Structure(Domain::range(4)).with_relation("G", binary_relation(4, {{0, 1}, {1, 2}, {2, 0}, {3, 3}}));
    const Structure infl = inflationary_fixpoint(tc, graph);
    EXPECT_EQ(infl.relation("T"), warshall(graph.relation("G")));
}

TEST(OpenPredicates, ExcludesDefinedAndFunctions) {
    const Vocabulary v = open_predicates(definition_of(kClosureSource));
    EXPECT_EQ(v.size(), 1u);
    EXPECT_EQ(v.at("G").arity, 2u);
    EXPECT_TRUE(open_predicates(definition_of(kEvenSource)).empty());
}
