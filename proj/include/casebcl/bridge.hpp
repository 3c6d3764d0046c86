#pragma once

#include <variant>

#include "casebcl/casebase.hpp"
#include "casebcl/formula.hpp"
#include "casebcl/model.hpp"

namespace casebcl {

// ⟨∅⟩(conj_s^{Atm0} ∧ t(x)) for a result case; throws UsageError for cases
// whose reason omits pro-factors (use tr2).
Formula tr1(const Precedent& c, const Signature& sig);
// ⟨∅⟩(conj_{X ∪ (s ∩ con-side)}^{Atm0} ∧ t(x))
Formula tr2(const Precedent& c, const Signature& sig);

// Conjunction over the cases in base order; ⊤ for an empty base.
Formula tr1_cb(const CaseBase& cb);
Formula tr2_cb(const CaseBase& cb);

// The valuation tr2 describes: X ∪ (s ∩ con-side).
AtomSet translated_state(const Precedent& c, const Signature& sig);

// A valuation forced both ways, with the first precedent (base order)
// forcing each outcome there.
struct ConflictReport {
    AtomSet state;
    Precedent forcing_plaintiff;
    Precedent forcing_defendant;
};

// Complete model deciding each valuation by the precedents that force it, ?
// where none does. On a double-forced valuation the lexicographically least
// one is reported instead. CapacityError above kMaxModelAtoms.
std::variant<ClassifierModel, ConflictReport> canonical_model(const CaseBase& cb);

// tr2(cb) is satisfiable in CM^prec, decided by building the canonical model.
bool theorem1_decide(const CaseBase& cb);

// Result-model form; throws UsageError when some case is not a result case.
bool corollary1_decide(const CaseBase& cb);

// tr2(cb) ∧ tr2(new_case) is satisfiable in CM^prec.
bool corollary2_decide(const CaseBase& cb, const Precedent& new_case);

}  // namespace casebcl
