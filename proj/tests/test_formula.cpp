#include <gtest/gtest.h>

#include "casebcl/errors.hpp"
#include "casebcl/formula.hpp"
#include "casebcl/random.hpp"
#include "fixtures.hpp"

using namespace casebcl;

namespace {

const Signature kSig = fixtures::trade_secrets_signature();

std::size_t error_position(std::string_view text, const Signature& sig = kSig) {
    try {
        parse_formula(text, sig);
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no error for '" << text << "'";
    return std::string::npos;
}

}  // namespace

TEST(Term, ConstructionAndOrder) {
    EXPECT_THROW(Term(AtomSet(1), AtomSet(1)), UsageError);
    const Term t = mk_conj(AtomSet(0b001), AtomSet(0b011));
    EXPECT_EQ(t.positive(), AtomSet(0b001));
    EXPECT_EQ(t.negative(), AtomSet(0b010));
    EXPECT_THROW(mk_conj(AtomSet(0b100), AtomSet(0b011)), UsageError);
    EXPECT_TRUE(mk_conj(AtomSet{}, AtomSet{}).is_top());
    EXPECT_EQ(to_string(Term(), kSig), "true");
    EXPECT_EQ(to_string(Term(AtomSet(0b1), AtomSet(0b10000)), kSig), "pi1 & ~delta2");
    EXPECT_TRUE(term_holds(AtomSet(0b1), Term(AtomSet(0b1), AtomSet(0b10))));
    EXPECT_FALSE(term_holds(AtomSet(0b11), Term(AtomSet(0b1), AtomSet(0b10))));
    EXPECT_TRUE(term_subset(Term(AtomSet(0b1), {}), Term(AtomSet(0b1), AtomSet(0b10))));
    // Per atom: positive before negative, shorter prefix first.
    EXPECT_TRUE(term_less(Term(AtomSet(0b1), {}), Term({}, AtomSet(0b1))));
    EXPECT_TRUE(term_less(Term({}, AtomSet(0b1)), Term(AtomSet(0b10), AtomSet(0b1))));
}

TEST(Term, EmptyNegationIsNegatedAtom) {
    EXPECT_EQ(print_formula(term_to_formula(mk_conj(AtomSet{}, AtomSet(0b1))), kSig), "~pi1");
}

TEST(Printer, TranslationOfResultCase) {
    const AtomSet s = fixtures::facts(kSig, {"pi1", "pi2", "delta1"});
    const Formula f = diamond(AtomSet{}, land(describe_state(s, kSig), outcome(Outcome::Plaintiff)));
    EXPECT_EQ(print_formula(f, kSig), "<> (pi1 & pi2 & delta1 & ~pi3 & ~delta2 & ~delta3 & t(1))");
}

TEST(Printer, DerivedConnectives) {
    const Formula p = atom(0);
    const Formula q = atom(3);
    EXPECT_EQ(print_formula(lor(p, q), kSig), "(pi1 | delta1)");
    EXPECT_EQ(print_formula(implies(p, q), kSig), "(pi1 -> delta1)");
    EXPECT_EQ(print_formula(box(AtomSet(0b11), p), kSig), "[pi1, pi2] pi1");
    EXPECT_EQ(print_formula(diamond(AtomSet{}, p), kSig), "<> pi1");
    EXPECT_EQ(print_formula(outcome(Outcome::Undecided), kSig), "t(?)");
    EXPECT_EQ(print_formula(top(), kSig), "true");
    EXPECT_EQ(print_formula(bottom(), kSig), "false");
    EXPECT_EQ(big_and({}), top());
    EXPECT_EQ(big_or({}), bottom());
}

TEST(Parser, Basics) {
    EXPECT_EQ(parse_formula("pi1 & ~delta2", kSig), land(atom(0), lnot(atom(4))));
    EXPECT_EQ(parse_formula("π1 ∧ ¬δ2", kSig), land(atom(0), lnot(atom(4))));
    EXPECT_EQ(parse_formula("[∅] t(1) -> t(1)", kSig),
              implies(box(AtomSet{}, outcome(Outcome::Plaintiff)), outcome(Outcome::Plaintiff)));
    EXPECT_EQ(parse_formula("[] t(1)", kSig), parse_formula("[∅]t(1)", kSig));
    EXPECT_EQ(parse_formula("⟨∅⟩ pi1", kSig), diamond(AtomSet{}, atom(0)));
    EXPECT_EQ(parse_formula("t ( ? )", kSig), outcome(Outcome::Undecided));
    EXPECT_EQ(parse_formula("true", kSig), top());
}

TEST(Parser, Associativity) {
    const Formula p = atom(0), q = atom(1), r = atom(2);
    EXPECT_EQ(parse_formula("pi1 -> pi2 -> pi3", kSig), implies(p, implies(q, r)));
    EXPECT_EQ(parse_formula("pi1 & pi2 & pi3", kSig), land(land(p, q), r));
    EXPECT_EQ(parse_formula("pi1 | pi2 & pi3", kSig), lor(p, land(q, r)));
    EXPECT_EQ(parse_formula("~pi1 & pi2", kSig), land(lnot(p), q));
    EXPECT_EQ(parse_formula("pi1 <-> pi2 <-> pi3", kSig), iff(iff(p, q), r));
}

TEST(Parser, KeywordsYieldToFactorNames) {
    Signature sig({"true"}, {"x"});
    EXPECT_EQ(parse_formula("true", sig), atom(0));
    EXPECT_EQ(parse_formula("false", sig), bottom());
}

TEST(Parser, PositionedErrors) {
    EXPECT_EQ(error_position(""), 0u);
    EXPECT_EQ(error_position("pi1 &"), 5u);
    EXPECT_EQ(error_position("pi1 & pi9"), 6u);
    EXPECT_EQ(error_position("(pi1"), 4u);
    EXPECT_EQ(error_position("pi1 )"), 4u);
    EXPECT_EQ(error_position("t(2)"), 2u);
    EXPECT_EQ(error_position("t(1"), 3u);
    EXPECT_EQ(error_position("[pi1 pi2] pi1"), 5u);
    EXPECT_EQ(error_position("[pi1,] pi1"), 5u);
    EXPECT_EQ(error_position("pi1 - pi2"), 4u);
    EXPECT_EQ(error_position("pi1 $"), 4u);
    EXPECT_EQ(error_position("<pi1 pi1"), 5u);
}

TEST(Parser, RoundTripRandom) {
    Rng rng(3);
    for (int i = 0; i < 3000; ++i) {
        const auto sig = random_signature(rng, 1 + i % 6);
        const Formula f = random_formula(rng, sig, 1 + i % 5);
        const std::string text = print_formula(f, sig);
        ASSERT_EQ(parse_formula(text, sig), f) << text;
    }
}

TEST(Formula, SizeAndAtoms) {
    const Formula f = land(atom(0), box(AtomSet(0b100), atom(1)));
    EXPECT_EQ(f.size(), 4u);
    EXPECT_EQ(f.atoms_used(), AtomSet(0b111));
}
