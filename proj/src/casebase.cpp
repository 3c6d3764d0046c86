#include "casebcl/casebase.hpp"

#include <unordered_map>

#include "casebcl/errors.hpp"

namespace casebcl {

CaseBase::CaseBase(Signature signature, std::vector<Precedent> cases) : signature_(std::move(signature)) {
    cases_.reserve(cases.size());
    for (auto& c : cases) {
        bool dup = false;
        for (const auto& have : cases_) {
            if (have.same_case(c)) {
                dup = true;
                break;
            }
        }
        if (!dup) cases_.push_back(std::move(c));
    }
}

CaseBase CaseBase::with(Precedent c) const {
    std::vector<Precedent> next(cases_.begin(), cases_.end());
    next.push_back(std::move(c));
    return CaseBase(signature_, std::move(next));
}

ValidationReport validate_precedent(const Signature& sig, const Precedent& c) {
    ValidationReport report;
    auto error = [&](std::string msg) { report.errors.push_back({c.id, std::move(msg)}); };

    if (c.id.empty()) error("empty case id");
    if (!c.facts.subset_of(sig.all())) error("facts contain a factor outside the signature");
    if (!c.reason.subset_of(sig.all())) error("reason contains a factor outside the signature");
    if (c.outcome == Outcome::Undecided) {
        error("outcome must be 1 or 0");
        return report;
    }
    if (!c.reason.subset_of(sig.side(c.outcome))) error("reason polarity mismatch");
    if (!c.reason.subset_of(c.facts)) error("reason not contained in facts");
    if (report.ok() && c.reason.empty()) {
        report.warnings.push_back({c.id, "empty reason forces the outcome on every situation with a weaker con-side"});
    }
    return report;
}

ValidationReport validate_case_base(const CaseBase& cb) {
    ValidationReport report;
    std::unordered_map<std::string, const Precedent*> by_id;
    for (const auto& c : cb.cases()) {
        auto one = validate_precedent(cb.signature(), c);
        report.errors.insert(report.errors.end(), one.errors.begin(), one.errors.end());
        report.warnings.insert(report.warnings.end(), one.warnings.begin(), one.warnings.end());
        auto [it, inserted] = by_id.emplace(c.id, &c);
        if (!inserted) report.errors.push_back({c.id, "duplicate case id"});
    }
    return report;
}

bool is_result_case(const Precedent& c, const Signature& sig) {
    return c.reason == (c.facts & sig.side(c.outcome));
}

namespace {

void require_opposite(const Reason& winner, const Reason& loser) {
    if (winner.polarity == Outcome::Undecided || loser.polarity == Outcome::Undecided ||
        winner.polarity == loser.polarity) {
        throw UsageError("compared reasons must favor opposite outcomes in {1, 0}");
    }
}

// Preference through one case, polarity already checked.
bool prefers_unchecked(const Precedent& c, AtomSet winner, AtomSet loser) {
    return loser.subset_of(c.facts) && c.reason.subset_of(winner);
}

}  // namespace

bool case_prefers(const Precedent& c, const Reason& winner, const Reason& loser) {
    require_opposite(winner, loser);
    if (winner.polarity != c.outcome) throw UsageError("winning reason must favor the case outcome");
    // loser favors the opposite side, so loser ⊆ facts is loser ⊆ facts ∩ con-side
    return prefers_unchecked(c, winner.factors, loser.factors);
}

bool case_base_prefers(const CaseBase& cb, const Reason& winner, const Reason& loser) {
    require_opposite(winner, loser);
    for (const auto& c : cb.cases()) {
        if (c.outcome == winner.polarity && prefers_unchecked(c, winner.factors, loser.factors)) return true;
    }
    return false;
}

bool forces(const Precedent& c, AtomSet s, const Signature& sig) {
    const AtomSet con = sig.side(opposite(c.outcome));
    return c.reason.subset_of(s) && (s & con).subset_of(c.facts & con);
}

namespace {

std::optional<ConflictWitness> least_conflict(const CaseBase& cb) {
    const Signature& sig = cb.signature();
    std::optional<ConflictWitness> best;
    for (const auto& c0 : cb.cases()) {
        if (c0.outcome != Outcome::Defendant) continue;
        for (const auto& c1 : cb.cases()) {
            if (c1.outcome != Outcome::Plaintiff) continue;
            if (!c0.reason.subset_of(c1.facts & sig.defendant())) continue;
            if (!c1.reason.subset_of(c0.facts & sig.plaintiff())) continue;
            // Both force every s with X0 ∪ X1 ⊆ s ⊆ (s0 ∩ Plt) ∪ (s1 ∩ Dfd).
            const AtomSet lower = c0.reason | c1.reason;
            const AtomSet upper = (c0.facts & sig.plaintiff()) | (c1.facts & sig.defendant());
            const AtomSet state = lex_least_between(lower, upper);
            if (!best || lex_less(state, best->state)) {
                best = ConflictWitness{c0, c1, c0.cited(), c1.cited(), state};
            }
        }
    }
    return best;
}

}  // namespace

bool is_consistent(const CaseBase& cb) {
    const Signature& sig = cb.signature();
    for (const auto& c0 : cb.cases()) {
        if (c0.outcome != Outcome::Defendant) continue;
        for (const auto& c1 : cb.cases()) {
            if (c1.outcome != Outcome::Plaintiff) continue;
            if (c0.reason.subset_of(c1.facts & sig.defendant()) && c1.reason.subset_of(c0.facts & sig.plaintiff())) {
                return false;
            }
        }
    }
    return true;
}

std::optional<ConflictWitness> conflict_witness(const CaseBase& cb) { return least_conflict(cb); }

std::string_view to_string(Forced f) {
    switch (f) {
        case Forced::Plaintiff: return "1";
        case Forced::Defendant: return "0";
        case Forced::Undecided: return "?";
        case Forced::Conflict: return "conflict";
    }
    return "?";
}

ForcedOutcome forced_outcome(const CaseBase& cb, AtomSet s) {
    const Signature& sig = cb.signature();
    if (!s.subset_of(sig.all())) throw UsageError("situation contains a factor outside the signature");
    ForcedOutcome out;
    for (const auto& c : cb.cases()) {
        if (!forces(c, s, sig)) continue;
        (c.outcome == Outcome::Plaintiff ? out.forcing_plaintiff : out.forcing_defendant).push_back(c.id);
    }
    const bool one = !out.forcing_plaintiff.empty();
    const bool zero = !out.forcing_defendant.empty();
    out.verdict = one && zero ? Forced::Conflict
                  : one       ? Forced::Plaintiff
                  : zero      ? Forced::Defendant
                              : Forced::Undecided;
    return out;
}

UpdateDecision check_update(const CaseBase& cb, const Precedent& new_case) {
    auto report = validate_precedent(cb.signature(), new_case);
    if (!report.ok()) {
        throw UsageError("malformed case '" + new_case.id + "': " + report.errors.front().message);
    }
    auto witness = conflict_witness(cb.with(new_case));
    return {!witness.has_value(), std::move(witness)};
}

}  // namespace casebcl
