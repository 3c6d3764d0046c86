#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "casebcl/casebase.hpp"
#include "casebcl/formula.hpp"
#include "casebcl/model.hpp"
#include "casebcl/term.hpp"

namespace casebcl {

// Term-lattice enumeration visits 3^n terms.
inline constexpr std::size_t kMaxExplainAtoms = 12;
// Hitting-set duality is checked by brute force over 2^n candidate sets.
inline constexpr std::size_t kMaxDualityAtoms = 4;

enum class ExplanationKind { PImp, AXp, WAXp, CXp, WCXp };

std::string_view to_string(ExplanationKind k);
std::optional<ExplanationKind> explanation_kind_from_string(std::string_view text);

struct ExplanationSet {
    ExplanationKind kind = ExplanationKind::PImp;
    Outcome target = Outcome::Undecided;
    std::optional<AtomSet> state;  // absent for PImp
    std::vector<Term> terms;       // term_less order
};

// Every state satisfying the term is decided x (vacuous when none does).
bool is_implicant(const ClassifierModel& model, const Term& t, Outcome x);
// An implicant none of whose one-literal deletions is an implicant.
bool is_prime_implicant(const ClassifierModel& model, const Term& t, Outcome x);

// t holds at s and is an implicant / prime implicant for x.
bool is_waxp(const ClassifierModel& model, AtomSet s, const Term& t, Outcome x);
bool is_axp(const ClassifierModel& model, AtomSet s, const Term& t, Outcome x);

// t holds at s, s is decided x, and re-assigning t's atoms (everything else
// fixed) reaches a state not decided x. The minimal form additionally
// requires that no single atom of t can be dropped from the variation.
bool is_wcxp(const ClassifierModel& model, AtomSet s, const Term& t, Outcome x);
bool is_cxp(const ClassifierModel& model, AtomSet s, const Term& t, Outcome x);

// Subset-minimal implicants for x over the whole term lattice.
ExplanationSet enumerate_prime_implicants(const ClassifierModel& model, Outcome x,
                                          std::size_t bound = kMaxExplainAtoms);

// Explanations of s's own decision; candidates are the terms true at s.
ExplanationSet enumerate_axp(const ClassifierModel& model, AtomSet s, std::size_t bound = kMaxExplainAtoms);
ExplanationSet enumerate_waxp(const ClassifierModel& model, AtomSet s, std::size_t bound = kMaxExplainAtoms);
ExplanationSet enumerate_cxp(const ClassifierModel& model, AtomSet s, std::size_t bound = kMaxExplainAtoms);
ExplanationSet enumerate_wcxp(const ClassifierModel& model, AtomSet s, std::size_t bound = kMaxExplainAtoms);

// Dispatch on kind. PImp ignores the state; the state-based kinds use the
// given target instead of s's decision when one is supplied.
bool explanation_holds(ExplanationKind kind, const ClassifierModel& model, std::optional<AtomSet> s,
                       const Term& t, Outcome x);

// X together with the negation of every con-factor absent from the case:
// conj_X^{(X ∪ con) ∖ (s ∩ con)}.
Term waxp_from_reason(const Precedent& c, const Signature& sig);

// The explanation notions as formulas of the classifier language.
Formula imp_formula(const Term& t, Outcome x);                          // [∅](λ → t(x))
Formula pimp_formula(const Term& t, Outcome x);                         // [∅](λ → (t(x) ∧ ⋀ ⟨Atm(λ)∖{p}⟩¬t(x)))
Formula waxp_formula(const Term& t, Outcome x);                         // λ ∧ Imp
Formula axp_formula(const Term& t, Outcome x);                          // λ ∧ PImp
Formula wcxp_formula(const Term& t, Outcome x, const Signature& sig);   // λ ∧ t(x) ∧ ⟨Atm0∖Atm(λ)⟩¬t(x)
Formula cxp_formula(const Term& t, Outcome x, const Signature& sig);    // λ ∧ ⟨..⟩¬t(x) ∧ ⋀ [(Atm0∖Atm(λ)) ∪ {p}] t(x)

struct PropositionReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

// Checks over the canonical model of a consistent base; UsageError when cb
// is inconsistent.
//   prop2: a prime implicant for x̄ either negates a reason factor or needs a
//          con-factor the case lacks.
//   prop3: some wAXp at s has positive part exactly X.
//   prop4: waxp_from_reason(c) is a wAXp at s.
//   prop5: when ¬Y alone weakly contrastively explains x at s, Y together
//          with s's con-factors is not beaten by X.
PropositionReport check_prop2(const CaseBase& cb);
PropositionReport check_prop3(const CaseBase& cb);
PropositionReport check_prop4(const CaseBase& cb);
PropositionReport check_prop5(const CaseBase& cb);

// tr2(c) → ⋁_λ (Imp(λ,x) ∧ (λ → conj_X^X)) is valid over all classifier
// models, for each given case. Enumeration-bounded.
PropositionReport check_prop6(const Signature& sig, std::span<const Precedent> cases);

struct DualityReport {
    std::vector<AtomSet> axp_atoms;
    std::vector<AtomSet> cxp_atoms;
    std::vector<AtomSet> hitting_axp;  // minimal hitting sets of axp_atoms
    std::vector<AtomSet> hitting_cxp;  // minimal hitting sets of cxp_atoms

    bool ok() const { return hitting_axp == cxp_atoms && hitting_cxp == axp_atoms; }
};

// CXp atom sets at s are the minimal hitting sets of the AXp atom sets and
// vice versa. Requires a complete model; CapacityError above `bound`.
DualityReport check_mhs_duality(const ClassifierModel& model, AtomSet s, std::size_t bound = kMaxDualityAtoms);

// Minimal hitting sets of family within universe, ascending bit pattern.
std::vector<AtomSet> minimal_hitting_sets(std::span<const AtomSet> family, AtomSet universe);

}  // namespace casebcl
