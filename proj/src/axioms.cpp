#include "casebcl/axioms.hpp"

#include <algorithm>

namespace casebcl {

Formula axiom_k(const Formula& phi, const Formula& psi) {
    return implies(land(box(AtomSet{}, phi), box(AtomSet{}, implies(phi, psi))), box(AtomSet{}, psi));
}

Formula axiom_t(const Formula& phi) { return implies(box(AtomSet{}, phi), phi); }

Formula axiom_4(const Formula& phi) { return implies(box(AtomSet{}, phi), box(AtomSet{}, box(AtomSet{}, phi))); }

Formula axiom_b(const Formula& phi) { return implies(phi, box(AtomSet{}, diamond(AtomSet{}, phi))); }

Formula axiom_red(AtomSet x, const Formula& phi) {
    std::vector<Formula> parts;
    for_each_subset(x, [&](AtomSet y) {
        Formula d = term_to_formula(mk_conj(y, x));
        parts.push_back(implies(d, box(AtomSet{}, implies(d, phi))));
    });
    return iff(box(x, phi), big_and(parts));
}

Formula axiom_at_least(const Outcome (&order)[3]) {
    std::vector<Formula> parts;
    for (Outcome x : order) parts.push_back(outcome(x));
    return big_or(parts);
}

Formula axiom_at_most(Outcome x, Outcome y) { return implies(outcome(x), lnot(outcome(y))); }

Formula axiom_funct(Outcome x, const Signature& sig) {
    std::vector<Formula> parts;
    for_each_subset(sig.all(), [&](AtomSet y) {
        Formula d = describe_state(y, sig);
        parts.push_back(implies(land(d, outcome(x)), box(AtomSet{}, implies(d, outcome(x)))));
    });
    return big_and(parts);
}

bool AxiomReport::ok() const {
    return std::all_of(schemata.begin(), schemata.end(), [](const SchemaResult& r) { return r.failures == 0; });
}

AxiomReport check_axiom_suite(const Signature& sig, Rng& rng, std::size_t instances, int depth) {
    auto phi = [&] { return random_formula(rng, sig, depth); };
    auto pick_outcome = [&] { return kAllOutcomes[std::uniform_int_distribution<int>(0, 2)(rng)]; };

    using Maker = std::function<Formula()>;
    const std::vector<std::pair<std::string, Maker>> makers = {
        {"K", [&] { return axiom_k(phi(), phi()); }},
        {"T", [&] { return axiom_t(phi()); }},
        {"4", [&] { return axiom_4(phi()); }},
        {"B", [&] { return axiom_b(phi()); }},
        {"Red", [&] { return axiom_red(random_subset(rng, sig.all()), phi()); }},
        {"AtLeast",
         [&] {
             Outcome order[3] = {Outcome::Plaintiff, Outcome::Defendant, Outcome::Undecided};
             std::shuffle(std::begin(order), std::end(order), rng);
             return axiom_at_least(order);
         }},
        {"AtMost",
         [&] {
             Outcome x = pick_outcome();
             Outcome y = pick_outcome();
             while (y == x) y = pick_outcome();
             return axiom_at_most(x, y);
         }},
        {"Funct", [&] { return axiom_funct(pick_outcome(), sig); }},
    };

    AxiomReport report;
    std::vector<Formula> valid;
    auto record = [&](SchemaResult& row, const Formula& f) {
        ++row.instances;
        auto v = is_valid_tiny(f, sig, ModelClass::CM);
        if (v.valid) return true;
        if (row.failures++ == 0) {
            row.failed_instance = print_formula(f, sig);
            row.countermodel = std::move(v.countermodel);
        }
        return false;
    };
    for (const auto& [name, make] : makers) {
        SchemaResult row{name};
        for (std::size_t i = 0; i < instances; ++i) {
            Formula f = make();
            if (record(row, f)) valid.push_back(f);
        }
        report.schemata.push_back(std::move(row));
    }
    SchemaResult nec{"Nec"};
    for (const auto& f : valid) record(nec, box(AtomSet{}, f));
    report.schemata.push_back(std::move(nec));
    return report;
}

}  // namespace casebcl
