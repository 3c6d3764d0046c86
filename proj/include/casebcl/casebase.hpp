#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casebcl/atoms.hpp"

namespace casebcl {

// A set of same-polarity factors cited in favor of `polarity`.
struct Reason {
    AtomSet factors;
    Outcome polarity = Outcome::Plaintiff;

    bool operator==(const Reason&) const = default;
};

// A decided case (facts, reason, outcome). The id is a label for reporting
// only; identity is (facts, reason, outcome).
struct Precedent {
    std::string id;
    AtomSet facts;
    AtomSet reason;
    Outcome outcome = Outcome::Plaintiff;

    Reason cited() const { return {reason, outcome}; }
    bool same_case(const Precedent& o) const {
        return facts == o.facts && reason == o.reason && outcome == o.outcome;
    }
};

// Precedents over a shared signature. Cases with identical content are kept
// once (the first id wins); cases are otherwise stored in insertion order and
// are not checked here, see validate_case_base.
class CaseBase {
public:
    CaseBase() = default;
    explicit CaseBase(Signature signature, std::vector<Precedent> cases = {});

    const Signature& signature() const { return signature_; }
    std::span<const Precedent> cases() const { return cases_; }
    std::size_t size() const { return cases_.size(); }
    bool empty() const { return cases_.empty(); }

    // Copy of this base with c added.
    CaseBase with(Precedent c) const;

private:
    Signature signature_;
    std::vector<Precedent> cases_;
};

struct Violation {
    std::string case_id;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> errors;
    std::vector<Violation> warnings;

    bool ok() const { return errors.empty(); }
};

ValidationReport validate_precedent(const Signature& sig, const Precedent& c);
ValidationReport validate_case_base(const CaseBase& cb);

// The reason is every pro-factor of the situation.
bool is_result_case(const Precedent& c, const Signature& sig);

// loser <_c winner: loser ⊆ facts ∩ con-side and c.reason ⊆ winner.
// Throws UsageError unless winner favors c.outcome and loser the opposite.
bool case_prefers(const Precedent& c, const Reason& winner, const Reason& loser);

// Some case of cb prefers winner over loser. Throws UsageError unless the
// reasons have opposite polarities in {1, 0}.
bool case_base_prefers(const CaseBase& cb, const Reason& winner, const Reason& loser);

// The case forces its outcome on s: s's pro-side contains the reason and s's
// con-side is within the case's con-side.
bool forces(const Precedent& c, AtomSet s, const Signature& sig);

// A pair of opposite-outcome precedents whose reasons each beat the other,
// together with the lexicographically least situation both of them force.
struct ConflictWitness {
    Precedent defendant_case;
    Precedent plaintiff_case;
    Reason defendant_reason;  // X0 of defendant_case
    Reason plaintiff_reason;  // X1 of plaintiff_case
    AtomSet state;
};

// Inconsistent iff some (s0,X0,0) and (s1,X1,1) satisfy X0 ⊆ s1 ∩ Dfd and
// X1 ⊆ s0 ∩ Plt.
bool is_consistent(const CaseBase& cb);

// Absent iff cb is consistent. Among all conflicting pairs, the one whose
// state is lexicographically least is returned (ties: case order).
std::optional<ConflictWitness> conflict_witness(const CaseBase& cb);

enum class Forced { Plaintiff, Defendant, Undecided, Conflict };

std::string_view to_string(Forced f);

struct ForcedOutcome {
    Forced verdict = Forced::Undecided;
    std::vector<std::string> forcing_plaintiff;  // ids, case order
    std::vector<std::string> forcing_defendant;
};

// a fortiori outcome of situation s under cb.
ForcedOutcome forced_outcome(const CaseBase& cb, AtomSet s);

struct UpdateDecision {
    bool accepted = false;
    std::optional<ConflictWitness> witness;
};

// Adding new_case keeps the base consistent. Throws UsageError when the case
// is malformed over cb's signature.
UpdateDecision check_update(const CaseBase& cb, const Precedent& new_case);

}  // namespace casebcl
