#include <gtest/gtest.h>

#include "idlogic/checker/checker.hpp"
#include "idlogic/ground/ground.hpp"
#include "support/builders.hpp"

using namespace idlogic;
using namespace idlogic::testing;

namespace {

std::vector<std::string> scc_names(const SccDecomposition& scc, const GroundRuleSet& g) {
    std::vector<std::string> out;
    for (std::size_t c : scc.order) {
        std::string line = scc.cyclic[c] ? "*" : "";
        for (AtomId a : scc.members[c]) line += (line.empty() || line == "*" ? "" : " ") + g.atoms().name(a, g.base().domain());
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(Ground, EvenOnShortChain) {
    const GroundRuleSet g = ground_definition(definition_of(kEvenSource), chain(2));
    EXPECT_EQ(g.dump(), "E[0] := true\nE[1] := ~-E[0]\nE[2] := ~-E[1] | ~-E[2]\n");
    EXPECT_EQ(g.atoms().defined_count(), 3u);
}

TEST(Ground, Delta0Bodies) {
    const GroundRuleSet g = ground_definition(definition_of(kDelta0Source), propositional());
    EXPECT_EQ(g.dump(), "P := true\nQ := ~-P | +Q\n");
}

TEST(Ground, ClosureFoldsFixedGraph) {
    const Structure base = Structure(Domain::range(2)).with_relation("G", binary_relation(2, {{0, 1}}));
    const GroundRuleSet g = ground_definition(definition_of(kClosureSource), base);
    EXPECT_EQ(g.body_string(g.body(*g.atoms().id("T", {el(0), el(1)}))), "true");
    EXPECT_TRUE(g.symbolic_open().empty());
}

TEST(Ground, SymbolicOpenAtoms) {
    const Structure base = Structure(Domain::range(2)).with_relation("G", binary_relation(2, {{0, 1}}));
    const GroundRuleSet g = ground_definition(definition_of(kClosureSource), base, GroundOptions{false});
    EXPECT_EQ(g.symbolic_open(), std::vector<std::string>{"G"});
    EXPECT_EQ(g.body_string(g.body(*g.atoms().id("T", {el(0), el(1)}))),
              "(G[0,1] | ((+T[0,0] & G[0,1]) | (+T[0,1] & G[1,1])))");
}

TEST(Ground, Errors) {
    const Definition def = definition_of(kEvenSource);
    EXPECT_THROW(ground_definition(def, Structure(Domain::range(3)).with_constant("0", el(0))),
                 MissingFunctionInterpretation);
    GroundOptions tight;
    tight.atom_budget = 5;
    EXPECT_THROW(ground_definition(def, chain(9), tight), DomainTooLarge);
}

TEST(EvalBody, Examples) {
    const GroundRuleSet even = ground_definition(definition_of(kEvenSource), chain(2));
    const Structure with_e0 = chain(2).with_relation("E", unary(3, {0}));
    EXPECT_FALSE(eval_body(even, {"E", {el(1)}}, with_e0));

    const GroundRuleSet d0 = ground_definition(definition_of(kDelta0Source), propositional());
    const Structure empty = propositional({"P", "Q"});
    const Structure both = propositional({"P", "Q"}, {"P", "Q"});
    EXPECT_FALSE(eval_body_pair(d0, {"Q", {}}, empty, both));
    EXPECT_TRUE(eval_body_pair(d0, {"Q", {}}, both, empty));
    EXPECT_THROW(eval_body(d0, {"Q", {}}, chain(2).with_relation("P", Relation(3, 0)).with_relation("Q", Relation(3, 0))),
                 DomainMismatch);
}

TEST(EvalBody, PairOnDiagonalIsPlainEvaluation) {
    InstanceGenerator gen(17);
    for (int k = 0; k < 100; ++k) {
        const RandomInstance inst = gen.next();
        const GroundRuleSet g = ground_definition(inst.def, inst.open);
        const ExtensionLattice lat(inst.open, inst.open.vocab().united(defined_vocabulary(inst.def)));
        for (ExtensionStream s = enumerate_extensions(lat); auto i = s.next();)
            for (AtomId a = 0; a < g.atoms().defined_count(); ++a) {
                const GroundAtom head = g.atoms().atom(a);
                EXPECT_EQ(eval_body_pair(g, head, *i, *i), eval_body(g, head, *i));
            }
    }
}

// Grounding soundness: the ground body of X[ā] agrees with the checker on the
// single-rule body φ_X[ā].
TEST(Ground, AgreesWithCheckerOnRandomDefinitions) {
    InstanceGenerator gen(23);
    Checker checker;
    for (int k = 0; k < 40; ++k) {
        const RandomInstance inst = gen.next();
        const GroundRuleSet g = ground_definition(inst.def, inst.open);
        const Definition srf = single_rule_form(inst.def);
        const ExtensionLattice lat(inst.open, inst.open.vocab().united(defined_vocabulary(inst.def)));
        for (ExtensionStream s = enumerate_extensions(lat); auto i = s.next();)
            for (const Rule& r : srf.rules) {
                const std::size_t n = i->domain().size();
                for (std::size_t idx = 0; idx < tuple_count(n, r.vars.size()); ++idx) {
                    const Tuple args = tuple_at(idx, n, r.vars.size());
                    Structure at = *i;
                    std::map<std::string, Term> subst;
                    for (std::size_t v = 0; v < args.size(); ++v) {
                        const std::string c = "c" + std::to_string(v);
                        at = at.with_constant(c, args[v]);
                        subst[r.vars[v]] = Term::apply(c);
                    }
                    EXPECT_EQ(eval_body(g, {r.head, args}, *i), checker.satisfies(at, substitute(r.body, subst)));
                }
            }
    }
}

TEST(DependencyGraph, EvenOnShortChain) {
    const GroundRuleSet g = ground_definition(definition_of(kEvenSource), chain(2));
    const DependencyGraph dg = dependency_graph(g);
    EXPECT_EQ(edge_list(dg, g), "\"E[0]\" -> \"E[1]\" [-]\n\"E[1]\" -> \"E[2]\" [-]\n\"E[2]\" -> \"E[2]\" [-]\n");
    EXPECT_TRUE(dg.has_self_edge(2));
    EXPECT_FALSE(dg.has_self_edge(1));
    EXPECT_EQ(scc_names(scc_preorder(dg), g), (std::vector<std::string>{"E[0]", "E[1]", "*E[2]"}));
}

TEST(DependencyGraph, MutualRecursion) {
    const GroundRuleSet g = ground_definition(definition_of("pred P, Q. { P <- Q. Q <- P. }"), propositional());
    const DependencyGraph dg = dependency_graph(g);
    EXPECT_EQ(edge_list(dg, g), "\"P\" -> \"Q\" [+]\n\"Q\" -> \"P\" [+]\n");
    EXPECT_EQ(scc_names(scc_preorder(dg), g), std::vector<std::string>{"*P Q"});
}

TEST(DependencyGraph, FoldedNonRecursiveDefinitionHasNoEdges) {
    const Definition def = definition_of("pred P/1, Q/1, R/1. { P(x) <- Q(x) & ~R(x). }");
    const Structure base =
        Structure(Domain::range(2)).with_relation("Q", unary(2, {0})).with_relation("R", unary(2, {1}));
    EXPECT_TRUE(dependency_graph(ground_definition(def, base)).edges().empty());
}

TEST(DependencyGraph, AcyclicChainOrderFollowsTheChain) {
    const Definition def = definition_of(kEvenOddSource);
    const GroundRuleSet g = ground_definition(def, odd_cycle_chain(3));
    const DependencyGraph dg = dependency_graph(g);
    const SccDecomposition scc = scc_preorder(dg);
    for (std::size_t c = 0; c < scc.members.size(); ++c) EXPECT_FALSE(scc.cyclic[c]);
    // Dependencies come first: every edge goes from an earlier to a later scc.
    std::vector<std::size_t> position(scc.members.size());
    for (std::size_t i = 0; i < scc.order.size(); ++i) position[scc.order[i]] = i;
    for (const DependencyEdge& e : dg.edges())
        EXPECT_LT(position[scc.component[e.from]], position[scc.component[e.to]]);
}

// Flipping an atom with no path to P[ā] never changes P[ā]'s pair evaluation.
TEST(DependencyGraph, CoversSemanticDependencies) {
    InstanceGenerator gen(31);
    for (int k = 0; k < 60; ++k) {
        const RandomInstance inst = gen.next();
        const GroundRuleSet g = ground_definition(inst.def, inst.open, GroundOptions{false});
        const DependencyGraph dg = dependency_graph(g);
        const std::size_t atoms = g.atoms().size();
        // reach[a][b]: b reachable from a.
        std::vector<std::vector<bool>> reach(atoms, std::vector<bool>(atoms, false));
        for (AtomId a = 0; a < atoms; ++a) {
            std::vector<AtomId> stack = {a};
            while (!stack.empty()) {
                const AtomId x = stack.back();
                stack.pop_back();
                for (AtomId y : dg.successors(x))
                    if (!reach[a][y]) {
                        reach[a][y] = true;
                        stack.push_back(y);
                    }
            }
        }
        std::mt19937_64& rng = gen.rng();
        for (int trial = 0; trial < 20; ++trial) {
            AtomValues lower(atoms), upper(atoms);
            for (std::size_t i = 0; i < atoms; ++i) {
                lower[i] = rng() & 1;
                upper[i] = lower[i] | (rng() & 1);
            }
            for (AtomId p = 0; p < g.atoms().defined_count(); ++p) {
                const bool before = g.eval(g.body(p), lower, upper);
                for (AtomId q = 0; q < atoms; ++q) {
                    if (reach[q][p]) continue;
                    AtomValues l2 = lower, u2 = upper;
                    l2[q] ^= 1;
                    u2[q] ^= 1;
                    EXPECT_EQ(g.eval(g.body(p), l2, u2), before);
                }
            }
        }
    }
}
