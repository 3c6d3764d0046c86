#include <gtest/gtest.h>

#include "casebcl/axioms.hpp"
#include "casebcl/enumerate.hpp"
#include "casebcl/errors.hpp"
#include "casebcl/model.hpp"
#include "casebcl/random.hpp"
#include "oracles.hpp"

using namespace casebcl;

TEST(StateSet, SpreadAndComplement) {
    StateSet s = StateSet::none(3);
    s.set(AtomSet(0b001));
    s.spread_up(1);
    EXPECT_EQ(s.members(), (std::vector<AtomSet>{AtomSet(0b001), AtomSet(0b011)}));
    s.spread_down(0);
    EXPECT_EQ(s.count(), 4u);
    EXPECT_EQ(s.complement().count(), 4u);
    EXPECT_TRUE(StateSet::with_atom(3, 2).test(AtomSet(0b100)));
    EXPECT_FALSE(StateSet::with_atom(3, 2).test(AtomSet(0b011)));
}

TEST(StateSet, LargeSignatures) {
    StateSet s = StateSet::none(8);
    s.set(AtomSet(0));
    for (Atom p = 0; p < 8; ++p) s.spread_up(p);
    EXPECT_EQ(s, StateSet::universe(8));
}

TEST(Model, ConstructionErrors) {
    const Signature sig({"p"}, {"d"});
    std::vector<std::pair<AtomSet, Outcome>> none;
    EXPECT_THROW(ClassifierModel(sig, none), UsageError);
    std::vector<std::pair<AtomSet, Outcome>> dup{{AtomSet(1), Outcome::Plaintiff}, {AtomSet(1), Outcome::Defendant}};
    EXPECT_THROW(ClassifierModel(sig, dup), UsageError);
    std::vector<std::pair<AtomSet, Outcome>> outside{{AtomSet(4), Outcome::Plaintiff}};
    EXPECT_THROW(ClassifierModel(sig, outside), UsageError);
    std::vector<std::pair<AtomSet, Outcome>> one{{AtomSet(1), Outcome::Plaintiff}};
    const ClassifierModel m(sig, one);
    EXPECT_THROW(m.decision(AtomSet(0)), UsageError);
    EXPECT_THROW(satisfies(m, AtomSet(0), top()), UsageError);
    EXPECT_FALSE(check_compl(m));
}

TEST(Model, SatisfactionMatchesNaiveEvaluator) {
    Rng rng(21);
    for (int i = 0; i < 400; ++i) {
        const auto sig = random_signature(rng, 1 + i % 4);
        const auto m = random_model(rng, sig);
        const Formula f = random_formula(rng, sig, 1 + i % 4);
        for (AtomSet s : m.states()) ASSERT_EQ(satisfies(m, s, f), oracle::holds(m, s, f));
    }
}

TEST(Model, DualityAndUniversalModality) {
    Rng rng(22);
    for (int i = 0; i < 300; ++i) {
        const auto sig = random_signature(rng, 1 + i % 4);
        const auto m = random_model(rng, sig);
        const Formula f = random_formula(rng, sig, 2);
        const AtomSet w = random_subset(rng, sig.all());
        const auto states = m.states();
        const bool first = satisfies(m, states.front(), box(AtomSet{}, f));
        for (AtomSet s : states) {
            ASSERT_EQ(satisfies(m, s, diamond(w, f)), !satisfies(m, s, box(w, lnot(f))));
            ASSERT_EQ(satisfies(m, s, box(AtomSet{}, f)), first);
        }
    }
}

TEST(Model, OutcomeNegationOnlyExcludesOneValue) {
    const Signature sig({"p"}, {});
    const auto m = ClassifierModel::complete(sig, [](AtomSet) { return Outcome::Undecided; });
    EXPECT_TRUE(satisfies(m, AtomSet(0), land(lnot(outcome(Outcome::Plaintiff)), lnot(outcome(Outcome::Defendant)))));
    EXPECT_TRUE(satisfies(m, AtomSet(0), outcome(Outcome::Undecided)));
}

TEST(Model, TwoMonMatchesNaiveAndFormula) {
    Rng rng(23);
    for (int i = 0; i < 400; ++i) {
        const auto sig = random_signature(rng, 1 + i % 3);
        const auto m = random_model(rng, sig);
        ASSERT_EQ(check_2mon(m), oracle::two_way_monotone(m));
    }
    for (const auto& sig : {make_signature(1, 1), make_signature(2, 0), make_signature(0, 1)}) {
        const Formula two_mon = build_2mon(sig);
        const Formula compl_f = build_compl(sig);
        for_each_model(sig, ModelClass::CM, [&](const ClassifierModel& m) {
            EXPECT_EQ(holds_everywhere(m, two_mon), check_2mon(m));
            EXPECT_EQ(holds_everywhere(m, compl_f), check_compl(m));
            return true;
        });
    }
}

TEST(Model, FormulaBuildersAreBounded) {
    EXPECT_THROW(build_2mon(make_signature(3, 2)), CapacityError);
    EXPECT_NO_THROW(build_2mon(make_signature(2, 1), 3));
}

TEST(Enumeration, CountsAndBounds) {
    std::size_t cm = 0;
    for_each_model(make_signature(1, 0), ModelClass::CM, [&](const ClassifierModel&) { return ++cm, true; });
    EXPECT_EQ(cm, 3u + 3u + 9u);  // {∅}, {p}, both
    std::size_t prec = 0;
    for_each_model(make_signature(1, 0), ModelClass::CMPrec, [&](const ClassifierModel& m) {
        EXPECT_TRUE(oracle::two_way_monotone(m));
        return ++prec, true;
    });
    // Of the 9 tables, f(∅)=1 needs f({p})=1 and f({p})=0 needs f(∅)=0.
    EXPECT_EQ(prec, 6u);
    EXPECT_THROW(for_each_model(make_signature(2, 2), ModelClass::CM, [](const ClassifierModel&) { return true; }),
                 CapacityError);
    EXPECT_THROW(is_satisfiable_tiny(top(), make_signature(1, 0), ModelClass::CM, 9), CapacityError);
}

TEST(Enumeration, SatisfiabilityExamples) {
    const Signature sig({"p"}, {});
    EXPECT_FALSE(is_satisfiable_tiny(land(outcome(Outcome::Plaintiff), outcome(Outcome::Defendant)), sig,
                                     ModelClass::CM)
                     .satisfiable);
    const auto r = is_satisfiable_tiny(land(atom(0), outcome(Outcome::Plaintiff)), sig, ModelClass::CM);
    ASSERT_TRUE(r.satisfiable);
    EXPECT_TRUE(satisfies(r.witness->model, r.witness->state, land(atom(0), outcome(Outcome::Plaintiff))));
    // Not every valuation need be a state in general models.
    EXPECT_FALSE(is_valid_tiny(diamond(AtomSet{}, atom(0)), sig, ModelClass::CM).valid);
    EXPECT_TRUE(is_valid_tiny(diamond(AtomSet{}, atom(0)), sig, ModelClass::CMPrec).valid);
    const auto v = is_valid_tiny(outcome(Outcome::Plaintiff), sig, ModelClass::CM);
    ASSERT_FALSE(v.valid);
    EXPECT_FALSE(satisfies(v.countermodel->model, v.countermodel->state, outcome(Outcome::Plaintiff)));
}

TEST(Axioms, SchemataValidAtTwoAtoms) {
    Rng rng(24);
    const auto report = check_axiom_suite(make_signature(1, 1), rng, 10, 2);
    ASSERT_EQ(report.schemata.size(), 9u);
    for (const auto& row : report.schemata) EXPECT_EQ(row.failures, 0u) << row.name;
    EXPECT_TRUE(report.ok());
}

TEST(Axioms, NonTheoremDetected) {
    const Signature sig({"p"}, {});
    // Reverse of T is not valid.
    const Formula f = implies(atom(0), box(AtomSet{}, atom(0)));
    const auto v = is_valid_tiny(f, sig, ModelClass::CM);
    EXPECT_FALSE(v.valid);
}
