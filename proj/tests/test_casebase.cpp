#include <gtest/gtest.h>

#include "casebcl/casebase.hpp"
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

TEST(Signature, CanonicalOrderAndAliases) {
    EXPECT_EQ(kSig.size(), 6u);
    EXPECT_EQ(kSig.index("pi1"), 0u);
    EXPECT_EQ(kSig.index("delta1"), 3u);
    EXPECT_EQ(kSig.find("π2"), std::optional<Atom>(1));
    EXPECT_EQ(kSig.find("δ3"), std::optional<Atom>(5));
    EXPECT_FALSE(kSig.find("pi9"));
    EXPECT_THROW(kSig.index("pi9"), UsageError);
    EXPECT_THROW(Signature({"a", "a"}, {}), UsageError);
    EXPECT_THROW(Signature({"π1"}, {"pi1"}), UsageError);
    EXPECT_THROW(Signature({""}, {}), UsageError);
}

TEST(Signature, UnicodeNamesKeptVerbatim) {
    Signature sig({"π1"}, {"δ1"});
    EXPECT_EQ(sig.name(0), "π1");
    EXPECT_EQ(sig.find("pi1"), std::optional<Atom>(0));
    EXPECT_EQ(sig.find("δ1"), std::optional<Atom>(1));
}

TEST(Validation, RunningExampleIsWellFormed) {
    const auto report = validate_case_base(fixtures::trade_secrets());
    EXPECT_TRUE(report.ok());
    EXPECT_TRUE(report.warnings.empty());
}

TEST(Validation, RejectsMalformedCases) {
    auto errors_of = [](const Precedent& c) { return validate_precedent(kSig, c).errors; };
    auto bad_reason = make_case(kSig, "x", {"pi2"}, {"pi1"}, Outcome::Plaintiff);
    ASSERT_EQ(errors_of(bad_reason).size(), 1u);
    EXPECT_EQ(errors_of(bad_reason)[0].message, "reason not contained in facts");

    auto wrong_side = make_case(kSig, "x", {"pi1", "delta1"}, {"delta1"}, Outcome::Plaintiff);
    EXPECT_EQ(errors_of(wrong_side)[0].message, "reason polarity mismatch");

    Precedent undecided{"x", AtomSet{}, AtomSet{}, Outcome::Undecided};
    EXPECT_EQ(errors_of(undecided)[0].message, "outcome must be 1 or 0");

    Precedent outside{"x", AtomSet(1u << 7), AtomSet{}, Outcome::Plaintiff};
    EXPECT_FALSE(validate_precedent(kSig, outside).ok());

    Precedent no_id{"", AtomSet{}, AtomSet{}, Outcome::Plaintiff};
    EXPECT_EQ(errors_of(no_id)[0].message, "empty case id");
}

TEST(Validation, EmptyReasonWarns) {
    auto c = make_case(kSig, "x", {"pi1"}, {}, Outcome::Plaintiff);
    auto r = validate_precedent(kSig, c);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Validation, DuplicateIdsAndContent) {
    auto a = make_case(kSig, "c1", {"pi1"}, {"pi1"}, Outcome::Plaintiff);
    auto b = make_case(kSig, "c1", {"pi2"}, {"pi2"}, Outcome::Plaintiff);
    EXPECT_FALSE(validate_case_base(CaseBase(kSig, {a, b})).ok());

    auto same = a;
    same.id = "other";
    CaseBase cb(kSig, {a, same});
    ASSERT_EQ(cb.size(), 1u);
    EXPECT_EQ(cb.cases()[0].id, "c1");
}

TEST(Preference, RunningExample) {
    const auto cb = fixtures::trade_secrets();
    const Reason pi1{facts(kSig, {"pi1"}), Outcome::Plaintiff};
    const Reason d1{facts(kSig, {"delta1"}), Outcome::Defendant};
    const Reason pi2{facts(kSig, {"pi2"}), Outcome::Plaintiff};
    const Reason d2{facts(kSig, {"delta2"}), Outcome::Defendant};
    EXPECT_TRUE(case_prefers(cb.cases()[0], pi1, d1));
    EXPECT_TRUE(case_base_prefers(cb, pi1, d1));
    EXPECT_FALSE(case_base_prefers(cb, pi2, d2));
    EXPECT_FALSE(case_base_prefers(cb, d2, pi2));
    EXPECT_THROW(case_base_prefers(cb, pi1, pi2), UsageError);
    EXPECT_THROW(case_prefers(cb.cases()[0], d1, pi1), UsageError);
}

TEST(Consistency, RunningExample) {
    const auto cb = fixtures::trade_secrets();
    EXPECT_TRUE(is_consistent(cb));
    EXPECT_FALSE(conflict_witness(cb));
    EXPECT_TRUE(is_consistent(CaseBase(kSig)));
}

TEST(Consistency, ConflictingAdditionHasLeastWitness) {
    const auto cb = fixtures::trade_secrets().with(fixtures::conflicting_case());
    EXPECT_FALSE(is_consistent(cb));
    const auto w = conflict_witness(cb);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->defendant_case.id, "c3");
    EXPECT_EQ(w->plaintiff_case.id, "c1");
    EXPECT_EQ(w->defendant_reason.factors, facts(kSig, {"delta1"}));
    EXPECT_EQ(w->plaintiff_reason.factors, facts(kSig, {"pi1"}));
    EXPECT_EQ(w->state, facts(kSig, {"pi1", "pi2", "delta1"}));
}

TEST(Consistency, PrintedDeltaTwoVariantIsConsistent) {
    auto c = make_case(kSig, "c3", {"pi1", "pi2", "delta2"}, {"delta2"}, Outcome::Defendant);
    EXPECT_TRUE(is_consistent(fixtures::trade_secrets().with(c)));
}

TEST(Consistency, AgreesWithReasonPairOracle) {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const auto sig = random_signature(rng, 1 + i % 6);
        const auto cb = random_case_base(rng, sig, 4);
        ASSERT_EQ(is_consistent(cb), oracle::consistent_by_reason_pairs(cb)) << "sample " << i;
        ASSERT_EQ(is_consistent(cb), !conflict_witness(cb).has_value());
    }
}

TEST(Consistency, ExhaustiveAtThreeAtomsForPairs) {
    const auto sig = make_signature(2, 1);
    const auto all = all_precedents(sig);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            CaseBase cb(sig, {all[i], all[j]});
            ASSERT_EQ(is_consistent(cb), oracle::consistent_by_reason_pairs(cb));
        }
    }
}

TEST(Forcing, RunningExampleSituations) {
    const auto cb = fixtures::trade_secrets();
    auto s3 = forced_outcome(cb, facts(kSig, {"pi1", "pi3", "delta1"}));
    EXPECT_EQ(s3.verdict, Forced::Plaintiff);
    EXPECT_EQ(s3.forcing_plaintiff, std::vector<std::string>{"c1"});
    EXPECT_EQ(forced_outcome(cb, facts(kSig, {"pi2", "delta2"})).verdict, Forced::Undecided);
    EXPECT_EQ(forced_outcome(cb, AtomSet{}).verdict, Forced::Undecided);
    EXPECT_EQ(forced_outcome(cb, cb.cases()[1].facts).verdict, Forced::Defendant);
    EXPECT_THROW(forced_outcome(cb, AtomSet(1u << 9)), UsageError);
    EXPECT_EQ(to_string(Forced::Conflict), "conflict");
}

TEST(Forcing, ConflictStateReported) {
    const auto cb = fixtures::trade_secrets().with(fixtures::conflicting_case());
    EXPECT_EQ(forced_outcome(cb, facts(kSig, {"pi1", "pi2", "delta1"})).verdict, Forced::Conflict);
}

TEST(Forcing, AFortioriMonotone) {
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto sig = random_signature(rng, 2 + i % 4);
        const auto cb = random_case_base(rng, sig, 3);
        const bool consistent = is_consistent(cb);
        for_each_subset(sig.all(), [&](AtomSet s) {
            const auto f = forced_outcome(cb, s);
            if (f.verdict != Forced::Plaintiff && f.verdict != Forced::Defendant) return;
            const Outcome x = f.verdict == Forced::Plaintiff ? Outcome::Plaintiff : Outcome::Defendant;
            const AtomSet pro = s & sig.side(x);
            const AtomSet con = s & sig.side(opposite(x));
            for_each_subset(sig.all(), [&](AtomSet t) {
                if (!pro.subset_of(t) || !(t & sig.side(opposite(x))).subset_of(con)) return;
                const auto g = forced_outcome(cb, t).verdict;
                ASSERT_TRUE(g == f.verdict || g == Forced::Conflict);
                if (consistent) ASSERT_EQ(g, f.verdict);
            });
        });
    }
}

TEST(Forcing, ConsistentIffNoConflictState) {
    Rng rng(6);
    for (int i = 0; i < 300; ++i) {
        const auto sig = random_signature(rng, 1 + i % 6);
        const auto cb = random_case_base(rng, sig, 4);
        bool conflict = false;
        for_each_subset(sig.all(), [&](AtomSet s) {
            conflict = conflict || forced_outcome(cb, s).verdict == Forced::Conflict;
        });
        ASSERT_EQ(is_consistent(cb), !conflict);
        if (is_consistent(cb)) {
            for (const auto& c : cb.cases()) {
                ASSERT_EQ(forced_outcome(cb, c.facts).verdict,
                          c.outcome == Outcome::Plaintiff ? Forced::Plaintiff : Forced::Defendant);
            }
        }
    }
}

TEST(Update, RunningExample) {
    const auto cb = fixtures::trade_secrets();
    EXPECT_TRUE(check_update(cb, make_case(kSig, "c3", {"pi2", "delta2"}, {"pi2"}, Outcome::Plaintiff)).accepted);
    EXPECT_TRUE(check_update(cb, make_case(kSig, "c3", {"pi2", "delta2"}, {"delta2"}, Outcome::Defendant)).accepted);
    const auto rejected = check_update(cb, fixtures::conflicting_case());
    EXPECT_FALSE(rejected.accepted);
    ASSERT_TRUE(rejected.witness);
    EXPECT_EQ(rejected.witness->state, facts(kSig, {"pi1", "pi2", "delta1"}));
    EXPECT_THROW(check_update(cb, make_case(kSig, "x", {"pi2"}, {"pi1"}, Outcome::Plaintiff)), UsageError);
}

TEST(Update, RejectionIsMonotone) {
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        const auto sig = random_signature(rng, 2 + i % 4);
        const auto cb = random_case_base(rng, sig, 3);
        const auto c = random_precedent(rng, sig, "new");
        if (check_update(cb, c).accepted) continue;
        const auto bigger = cb.with(random_precedent(rng, sig, "extra"));
        ASSERT_FALSE(check_update(bigger, c).accepted);
    }
}
