#include <gtest/gtest.h>

#include "idlogic/checker/checker.hpp"
#include "idlogic/engine/engine.hpp"
#include "idlogic/syntax/printer.hpp"
#include "idlogic/transform/transform.hpp"
#include "support/builders.hpp"

using namespace idlogic;
using namespace idlogic::testing;

namespace {

const char* kMutual = "pred P, Q. { P <- Q. Q <- P. }";

std::vector<Structure> models_over(const Formula& phi, const Vocabulary& vocab, const Structure& base,
                                   const std::set<std::string>& free) {
    return enumerate_models(Theory{vocab, {phi}}, base, free);
}

}  // namespace

// Partitions ---------------------------------------------------------------------

TEST(Partition, RoutesRulesByHead) {
    const Definition def = definition_of(kEvenOddSource);
    const Partition p = make_partition(def, {{"E", 3}, {"O", 1}});
    ASSERT_EQ(p.parts.size(), 2u);
    EXPECT_EQ(p.parts[0].rules.size(), 1u);  // ordered by index: O first
    EXPECT_EQ(p.parts[0].rules[0].head, "O");
    EXPECT_EQ(p.parts[1].rules.size(), 2u);
}

TEST(Partition, Errors) {
    const Definition def = definition_of(kEvenOddSource);
    EXPECT_THROW(make_partition(def, {{"E", 0}, {"O", 0}}), TrivialPartition);
    EXPECT_THROW(make_partition(def, {{"E", 0}}), UncoveredPredicate);
}

TEST(Certify, Examples) {
    const Definition mutual = definition_of(kMutual);
    const CertificateReport nm = certify_reduction_partition(mutual, make_partition(mutual, {{"P", 0}, {"Q", 1}}),
                                                             propositional());
    EXPECT_EQ(nm.status, Certificate::Unknown);
    EXPECT_EQ(nm.witness, (std::vector<std::string>{"P", "Q"}));

    const Definition bad = definition_of("pred P, Q. { P <- ~P. Q <- ~P. }");
    EXPECT_EQ(certify_reduction_partition(bad, make_partition(bad, {{"P", 0}, {"Q", 1}}), propositional()).status,
              Certificate::Certified);

    const Definition evenodd = definition_of(kEvenOddSource);
    const Partition eo = make_partition(evenodd, {{"E", 0}, {"O", 1}});
    EXPECT_EQ(certify_reduction_partition(evenodd, eo, odd_cycle_chain(5)).status, Certificate::Certified);
    EXPECT_EQ(certify_reduction_partition(evenodd, eo, chain(4)).status, Certificate::Unknown);

    const CertificateReport strict = certify_strict_reduction(definition_of(kEvenSource), chain(20));
    EXPECT_EQ(strict.status, Certificate::Unknown);
    EXPECT_EQ(strict.witness, std::vector<std::string>{"E[20]"});
    EXPECT_EQ(certify_strict_reduction(definition_of(kEvenSource), odd_cycle_chain(5)).status, Certificate::Certified);
    EXPECT_EQ(certify_strict_reduction(definition_of("pred P. { P <- ~P. }"), propositional()).status,
              Certificate::Unknown);
    EXPECT_STREQ(to_string(Certificate::Certified), "certified");
}

TEST(Certify, MutualDefinitionSplitChangesModels) {
    const Theory th = parse_theory(kMutual);
    const Definition def = first_definition(th);
    const Partition p = make_partition(def, {{"P", 0}, {"Q", 1}});
    EXPECT_EQ(models_over(definition(def), th.vocab, propositional(), {"P", "Q"}).size(), 1u);
    EXPECT_EQ(models_over(conjunction_of(p), th.vocab, propositional(), {"P", "Q"}).size(), 2u);
}

// Translations -------------------------------------------------------------------

TEST(Translation, Texts) {
    const Definition even = definition_of(kEvenSource);
    EXPECT_EQ(to_string(completion(even)), "!x: E(x) <=> x=0 | ?y: (x=s(y) & ~E(y))");
    EXPECT_EQ(to_string(completion(definition_of(kMutual))), "(P <=> Q) & (Q <=> P)");
    EXPECT_EQ(to_string(pos_ind(even)),
              "(!x: (x=0 => E(x))) & (!x: (~E(x) => E(s(x)))) & !X/1: ((!x: (x=0 => X(x))) & "
              "(!x: (~X(x) => X(s(x)))) => !y: (E(y) => X(y)))");
}

TEST(Translation, OutputsReparse) {
    for (const char* src : {kEvenSource, kEvenOddSource, kDelta0Source, kClosureSource, kMutual}) {
        const Theory th = parse_theory(src);
        const Definition def = first_definition(th);
        for (const Formula& f : {completion(def), pos_ind(def), circumscription(def)})
            EXPECT_TRUE(alpha_equal(parse_formula(to_string(f), th.vocab), f)) << to_string(f);
    }
}

TEST(Translation, CompletionOfMutualHasTwoModels) {
    const Theory th = parse_theory(kMutual);
    EXPECT_EQ(models_over(completion(first_definition(th)), th.vocab, propositional(), {"P", "Q"}).size(), 2u);
}

TEST(Translation, PosIndOfFactIsLeast) {
    const Theory th = parse_theory("pred P, Q. { P. }");
    const std::vector<Structure> ms = models_over(pos_ind(first_definition(th)), th.vocab,
                                                  propositional({"Q"}), {"P"});
    ASSERT_EQ(ms.size(), 1u);
    EXPECT_TRUE(ms[0].holds("P", {}));
}

TEST(Translation, PosIndMissesNonMonotoneDefinitions) {
    const Theory th = parse_theory(kEvenSource);
    const Definition def = first_definition(th);
    const Structure base = chain(4);
    const std::set<std::string> free{"E"};
    const auto by_def = models_over(definition(def), th.vocab, base, free);
    const auto by_pos = models_over(pos_ind(def), th.vocab, base, free);
    ASSERT_EQ(by_def.size(), 1u);
    EXPECT_NE(by_pos, by_def);
}

TEST(Translation, PositiveDefinitionsAgree) {
    const Theory th = parse_theory(kClosureSource);
    const Definition def = first_definition(th);
    const Structure base =
        Structure(Domain::range(3)).with_relation("G", binary_relation(3, {{0, 1}, {1, 2}, {2, 2}}));
    const auto expected = models_over(definition(def), th.vocab, base, {"T"});
    ASSERT_EQ(expected.size(), 1u);
    EXPECT_EQ(models_over(pos_ind(def), th.vocab, base, {"T"}), expected);
    EXPECT_EQ(models_over(circumscription(def), th.vocab, base, {"T"}), expected);
}

// Iterated inductive definitions ---------------------------------------------------

TEST(Iid, Validation) {
    const Definition evenodd = definition_of(kEvenOddSource);
    const Partition split = make_partition(evenodd, {{"E", 0}, {"O", 1}});
    const IidCheck check = check_iid_sequence({split.parts});
    EXPECT_FALSE(check.valid);
    EXPECT_FALSE(check.reason.empty());
    EXPECT_FALSE(check_iid({{definition_of(kEvenSource)}}));  // negation
    EXPECT_TRUE(check_iid({{evenodd}}));
}

TEST(Iid, IteratedExtension) {
    const IidSequence seq{{definition_of("pred P. { P. }"), definition_of("pred P, Q. { Q <- P. }")}};
    ASSERT_TRUE(check_iid(seq));
    EXPECT_EQ(iterated_extension(seq, propositional()).atoms_string(), "{P, Q}");
    const IidSequence reversed{{seq.defs[1], seq.defs[0]}};
    EXPECT_FALSE(check_iid(reversed));
    EXPECT_THROW(iterated_extension(reversed, propositional()), NotAnIidSequence);
}
