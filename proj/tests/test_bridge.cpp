#include <gtest/gtest.h>

#include "casebcl/bridge.hpp"
#include "casebcl/enumerate.hpp"
#include "casebcl/errors.hpp"
#include "casebcl/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace casebcl;
using fixtures::facts;
using fixtures::make_case;

namespace {

const Signature kSig = fixtures::trade_secrets_signature();

}  // namespace

TEST(Translation, ResultCaseDisplay) {
    const auto c = make_case(kSig, "c", {"pi1", "pi2", "delta1"}, {"pi1", "pi2"}, Outcome::Plaintiff);
    EXPECT_EQ(print_formula(tr1(c, kSig), kSig), "<> (pi1 & pi2 & delta1 & ~pi3 & ~delta2 & ~delta3 & t(1))");
    EXPECT_EQ(tr1(c, kSig), tr2(c, kSig));
}

TEST(Translation, ReasonCases) {
    const auto cb = fixtures::trade_secrets();
    EXPECT_EQ(print_formula(tr2(cb.cases()[0], kSig), kSig),
              "<> (pi1 & delta1 & delta3 & ~pi2 & ~pi3 & ~delta2 & t(1))");
    EXPECT_EQ(print_formula(tr2(cb.cases()[1], kSig), kSig),
              "<> (pi2 & delta3 & ~pi1 & ~pi3 & ~delta1 & ~delta2 & t(0))");
    EXPECT_EQ(tr2_cb(cb), land(tr2(cb.cases()[0], kSig), tr2(cb.cases()[1], kSig)));
    EXPECT_EQ(tr2_cb(CaseBase(kSig)), top());
    EXPECT_THROW(tr1(cb.cases()[0], kSig), UsageError);
    EXPECT_THROW(tr1_cb(cb), UsageError);
    EXPECT_THROW(corollary1_decide(cb), UsageError);
}

TEST(Translation, ResultCasesTranslateIdentically) {
    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        const auto sig = random_signature(rng, 1 + i % 6);
        const auto c = random_result_precedent(rng, sig, "c");
        ASSERT_TRUE(is_result_case(c, sig));
        ASSERT_EQ(tr1(c, sig), tr2(c, sig));
    }
}

TEST(CanonicalModel, RunningExample) {
    const auto cb = fixtures::trade_secrets();
    auto built = canonical_model(cb);
    ASSERT_TRUE(std::holds_alternative<ClassifierModel>(built));
    const auto& m = std::get<ClassifierModel>(built);
    EXPECT_TRUE(in_cm_prec(m));
    const Atom pi1 = 0, pi3 = 2, d2 = 4, d3 = 5;
    for_each_subset(kSig.all(), [&](AtomSet s) {
        Outcome want = Outcome::Undecided;
        if (s.contains(pi1) && !s.contains(d2)) want = Outcome::Plaintiff;
        if (s.contains(d3) && !s.contains(pi1) && !s.contains(pi3)) want = Outcome::Defendant;
        ASSERT_EQ(m.decision(s), want);
    });
    EXPECT_EQ(m.decision(cb.cases()[0].facts), Outcome::Plaintiff);
    EXPECT_EQ(m.decision(cb.cases()[1].facts), Outcome::Defendant);
    EXPECT_TRUE(holds_everywhere(m, tr2_cb(cb)));
}

TEST(CanonicalModel, ConflictReported) {
    const auto cb = fixtures::trade_secrets().with(fixtures::conflicting_case());
    auto built = canonical_model(cb);
    ASSERT_TRUE(std::holds_alternative<ConflictReport>(built));
    const auto& r = std::get<ConflictReport>(built);
    EXPECT_EQ(r.state, facts(kSig, {"pi1", "pi2", "delta1"}));
    EXPECT_EQ(r.forcing_plaintiff.id, "c1");
    EXPECT_EQ(r.forcing_defendant.id, "c3");
    EXPECT_FALSE(theorem1_decide(cb));
    EXPECT_FALSE(corollary2_decide(fixtures::trade_secrets(), fixtures::conflicting_case()));
}

TEST(CanonicalModel, MembershipAndMinimality) {
    Rng rng(32);
    for (int i = 0; i < 300; ++i) {
        const auto sig = random_signature(rng, 1 + i % 6);
        const auto cb = random_case_base(rng, sig, 4);
        auto built = canonical_model(cb);
        ASSERT_EQ(std::holds_alternative<ClassifierModel>(built), is_consistent(cb));
        if (!is_consistent(cb)) continue;
        const auto& m = std::get<ClassifierModel>(built);
        ASSERT_TRUE(oracle::two_way_monotone(m));
        ASSERT_TRUE(check_compl(m));
        for (AtomSet s : m.states()) {
            ASSERT_TRUE(oracle::holds(m, s, tr2_cb(cb)));
            bool any = false;
            for (const auto& c : cb.cases()) {
                const AtomSet con = sig.side(opposite(c.outcome));
                if (c.reason.subset_of(s) && (s & con).subset_of(c.facts)) any = true;
            }
            ASSERT_EQ(m.decision(s) == Outcome::Undecided, !any);
        }
    }
}

TEST(CanonicalModel, AgreesWithBruteForceAtTwoAtoms) {
    const auto sig = make_signature(1, 1);
    const auto all = all_precedents(sig);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            const CaseBase cb(sig, {all[i], all[j]});
            const bool brute = oracle::satisfiable_prec(tr2_cb(cb), sig);
            ASSERT_EQ(theorem1_decide(cb), brute);
            ASSERT_EQ(is_consistent(cb), brute);
            ASSERT_EQ(is_satisfiable_tiny(tr2_cb(cb), sig, ModelClass::CMPrec).satisfiable, brute);
        }
    }
}

TEST(CanonicalModel, UpdateDecisionsAgree) {
    Rng rng(33);
    for (int i = 0; i < 300; ++i) {
        const auto sig = random_signature(rng, 2 + i % 5);
        const auto cb = random_consistent_case_base(rng, sig, 3);
        const auto c = random_precedent(rng, sig, "new");
        ASSERT_EQ(check_update(cb, c).accepted, corollary2_decide(cb, c));
    }
}

TEST(CanonicalModel, ResultBasesDecideLikeReasonBases) {
    Rng rng(34);
    for (int i = 0; i < 200; ++i) {
        const auto sig = random_signature(rng, 2 + i % 4);
        std::vector<Precedent> cases;
        for (int k = 0; k < 3; ++k) cases.push_back(random_result_precedent(rng, sig, "c" + std::to_string(k)));
        const CaseBase cb(sig, cases);
        ASSERT_EQ(corollary1_decide(cb), is_consistent(cb));
        ASSERT_EQ(tr1_cb(cb), tr2_cb(cb));
    }
}

TEST(CanonicalModel, CapacityBound) {
    std::vector<std::string> names;
    for (int i = 0; i < 21; ++i) names.push_back("p" + std::to_string(i));
    const CaseBase cb(Signature(names, {}));
    EXPECT_THROW(canonical_model(cb), CapacityError);
}
