#include "casebcl/bridge.hpp"

#include "casebcl/errors.hpp"

namespace casebcl {

AtomSet translated_state(const Precedent& c, const Signature& sig) {
    return c.reason | (c.facts & sig.side(opposite(c.outcome)));
}

Formula tr1(const Precedent& c, const Signature& sig) {
    if (!is_result_case(c, sig)) {
        throw UsageError("case '" + c.id + "' is not a result-model case; use the reason-model translation");
    }
    return diamond(AtomSet{}, land(describe_state(c.facts, sig), outcome(c.outcome)));
}

Formula tr2(const Precedent& c, const Signature& sig) {
    return diamond(AtomSet{}, land(describe_state(translated_state(c, sig), sig), outcome(c.outcome)));
}

Formula tr1_cb(const CaseBase& cb) {
    std::vector<Formula> parts;
    for (const auto& c : cb.cases()) parts.push_back(tr1(c, cb.signature()));
    return big_and(parts);
}

Formula tr2_cb(const CaseBase& cb) {
    std::vector<Formula> parts;
    for (const auto& c : cb.cases()) parts.push_back(tr2(c, cb.signature()));
    return big_and(parts);
}

std::variant<ClassifierModel, ConflictReport> canonical_model(const CaseBase& cb) {
    const Signature& sig = cb.signature();
    if (sig.size() > kMaxModelAtoms) throw CapacityError("canonical model over too many atoms", kMaxModelAtoms);
    const std::size_t valuations = std::size_t{1} << sig.size();
    std::vector<Outcome> decisions(valuations, Outcome::Undecided);
    std::optional<ConflictReport> conflict;
    for (std::size_t i = 0; i < valuations; ++i) {
        const AtomSet s(i);
        const Precedent* one = nullptr;
        const Precedent* zero = nullptr;
        for (const auto& c : cb.cases()) {
            if (!forces(c, s, sig)) continue;
            auto& slot = c.outcome == Outcome::Plaintiff ? one : zero;
            if (!slot) slot = &c;
        }
        if (one && zero) {
            if (!conflict || lex_less(s, conflict->state)) conflict = ConflictReport{s, *one, *zero};
        } else if (one) {
            decisions[i] = Outcome::Plaintiff;
        } else if (zero) {
            decisions[i] = Outcome::Defendant;
        }
    }
    if (conflict) return *conflict;
    return ClassifierModel::complete(sig, decisions);
}

bool theorem1_decide(const CaseBase& cb) { return std::holds_alternative<ClassifierModel>(canonical_model(cb)); }

bool corollary1_decide(const CaseBase& cb) {
    for (const auto& c : cb.cases()) {
        if (!is_result_case(c, cb.signature())) {
            throw UsageError("case '" + c.id + "' is not a result-model case");
        }
    }
    return theorem1_decide(cb);
}

bool corollary2_decide(const CaseBase& cb, const Precedent& new_case) {
    return theorem1_decide(cb.with(new_case));
}

}  // namespace casebcl
