#include "casebcl/random.hpp"

#include "casebcl/errors.hpp"

namespace casebcl {

Signature make_signature(std::size_t plaintiff, std::size_t defendant) {
    std::vector<std::string> p;
    std::vector<std::string> d;
    for (std::size_t i = 1; i <= plaintiff; ++i) p.push_back("p" + std::to_string(i));
    for (std::size_t i = 1; i <= defendant; ++i) d.push_back("d" + std::to_string(i));
    return Signature(std::move(p), std::move(d));
}

Signature random_signature(Rng& rng, std::size_t atoms) {
    std::uniform_int_distribution<std::size_t> split(0, atoms);
    const std::size_t p = split(rng);
    return make_signature(p, atoms - p);
}

AtomSet random_subset(Rng& rng, AtomSet of) {
    std::uint64_t bits = rng() & of.bits();
    return AtomSet(bits);
}

Precedent random_precedent(Rng& rng, const Signature& sig, std::string id) {
    Outcome x;
    if (sig.plaintiff_count() == 0) x = Outcome::Defendant;
    else if (sig.defendant_count() == 0) x = Outcome::Plaintiff;
    else x = (rng() & 1U) ? Outcome::Plaintiff : Outcome::Defendant;
    const AtomSet facts = random_subset(rng, sig.all());
    // Bias toward small reasons: each pro-factor kept with probability 1/2,
    // then once more with probability 1/2.
    AtomSet reason = random_subset(rng, facts & sig.side(x));
    if (rng() & 1U) reason = random_subset(rng, reason);
    return {std::move(id), facts, reason, x};
}

Precedent random_result_precedent(Rng& rng, const Signature& sig, std::string id) {
    Precedent c = random_precedent(rng, sig, std::move(id));
    c.reason = c.facts & sig.side(c.outcome);
    return c;
}

CaseBase random_case_base(Rng& rng, const Signature& sig, std::size_t max_cases) {
    std::uniform_int_distribution<std::size_t> count(0, max_cases);
    const std::size_t n = count(rng);
    std::vector<Precedent> cases;
    for (std::size_t i = 0; i < n; ++i) cases.push_back(random_precedent(rng, sig, "c" + std::to_string(i + 1)));
    return CaseBase(sig, std::move(cases));
}

CaseBase random_consistent_case_base(Rng& rng, const Signature& sig, std::size_t max_cases) {
    while (true) {
        CaseBase cb = random_case_base(rng, sig, max_cases);
        if (is_consistent(cb)) return cb;
    }
}

Formula random_formula(Rng& rng, const Signature& sig, int depth) {
    std::uniform_int_distribution<int> leaf_pick(0, static_cast<int>(sig.size()) + 2);
    auto leaf = [&] {
        const int k = leaf_pick(rng);
        if (k < static_cast<int>(sig.size())) return atom(static_cast<Atom>(k));
        return outcome(static_cast<Outcome>(k - static_cast<int>(sig.size())));
    };
    if (depth <= 0) return leaf();
    std::uniform_int_distribution<int> op(0, 9);
    switch (op(rng)) {
        case 0: return leaf();
        case 1: return lnot(random_formula(rng, sig, depth - 1));
        case 2: return land(random_formula(rng, sig, depth - 1), random_formula(rng, sig, depth - 1));
        case 3: return lor(random_formula(rng, sig, depth - 1), random_formula(rng, sig, depth - 1));
        case 4: return implies(random_formula(rng, sig, depth - 1), random_formula(rng, sig, depth - 1));
        case 5: return iff(random_formula(rng, sig, depth - 1), random_formula(rng, sig, depth - 1));
        case 6:
        case 7: return box(random_subset(rng, sig.all()), random_formula(rng, sig, depth - 1));
        case 8: return diamond(random_subset(rng, sig.all()), random_formula(rng, sig, depth - 1));
        default: return box(AtomSet{}, random_formula(rng, sig, depth - 1));
    }
}

ClassifierModel random_complete_model(Rng& rng, const Signature& sig) {
    std::uniform_int_distribution<int> pick(0, 2);
    return ClassifierModel::complete(sig, [&](AtomSet) { return static_cast<Outcome>(pick(rng)); });
}

ClassifierModel random_model(Rng& rng, const Signature& sig) {
    std::uniform_int_distribution<int> pick(0, 2);
    const std::size_t valuations = std::size_t{1} << sig.size();
    std::vector<std::pair<AtomSet, Outcome>> decisions;
    while (decisions.empty()) {
        for (std::size_t i = 0; i < valuations; ++i) {
            if (rng() & 1U) decisions.emplace_back(AtomSet(i), static_cast<Outcome>(pick(rng)));
        }
    }
    return ClassifierModel(sig, decisions);
}

std::vector<Precedent> all_precedents(const Signature& sig) {
    std::vector<Precedent> out;
    for (Outcome x : {Outcome::Plaintiff, Outcome::Defendant}) {
        for_each_subset(sig.all(), [&](AtomSet facts) {
            for_each_subset(facts & sig.side(x), [&](AtomSet reason) {
                out.push_back({"c" + std::to_string(out.size()), facts, reason, x});
            });
        });
    }
    return out;
}

}  // namespace casebcl
