#include "casebcl/selftest.hpp"

#include <chrono>

#include "casebcl/axioms.hpp"
#include "casebcl/bridge.hpp"
#include "casebcl/enumerate.hpp"
#include "casebcl/explain.hpp"

namespace casebcl {

namespace {

template <typename Body>
SuiteResult timed(std::string name, Body&& body) {
    SuiteResult r{std::move(name)};
    const auto start = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void fail(SuiteResult& r, const std::string& why) {
    if (r.failures++ == 0) r.first_failure = why;
}

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void absorb(SuiteResult& r, const PropositionReport& p) {
    r.checked += p.checked;
    for (const auto& c : p.counterexamples) fail(r, c);
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& o) {
    Rng rng(o.seed);
    std::vector<SuiteResult> out;

    out.push_back(timed("consistency", [&](SuiteResult& r) {
        for (std::size_t i = 0; i < o.consistency_bases; ++i) {
            const Signature sig = random_signature(rng, draw(rng, 2, kMaxEnumerationAtoms));
            const CaseBase cb = random_case_base(rng, sig, 3);
            const bool pairwise = is_consistent(cb);
            const bool canonical = theorem1_decide(cb);
            const bool sat = is_satisfiable_tiny(tr2_cb(cb), sig, ModelClass::CMPrec).satisfiable;
            ++r.checked;
            if (pairwise != canonical || canonical != sat) {
                fail(r, "verdicts disagree on " + std::to_string(cb.size()) + " cases over " +
                            std::to_string(sig.size()) + " atoms");
            }
        }
    }));

    out.push_back(timed("propositions", [&](SuiteResult& r) {
        for (std::size_t i = 0; i < o.proposition_bases; ++i) {
            const Signature sig = random_signature(rng, draw(rng, 2, o.max_atoms));
            const CaseBase cb = random_consistent_case_base(rng, sig, 4);
            absorb(r, check_prop2(cb));
            absorb(r, check_prop3(cb));
            absorb(r, check_prop4(cb));
            absorb(r, check_prop5(cb));
        }
    }));

    out.push_back(timed("implicant-validity", [&](SuiteResult& r) {
        for (const auto& sig : {make_signature(1, 0), make_signature(1, 1), make_signature(0, 2)}) {
            absorb(r, check_prop6(sig, all_precedents(sig)));
        }
        const Signature sig = make_signature(2, 1);
        std::vector<Precedent> sample;
        for (int i = 0; i < 3; ++i) sample.push_back(random_precedent(rng, sig, "c" + std::to_string(i)));
        absorb(r, check_prop6(sig, sample));
    }));

    out.push_back(timed("axioms", [&](SuiteResult& r) {
        const AxiomReport report = check_axiom_suite(make_signature(1, 1), rng, o.axiom_instances, 2);
        for (const auto& row : report.schemata) {
            r.checked += row.instances;
            for (std::size_t k = 0; k < row.failures; ++k) {
                fail(r, row.name + ": " + row.failed_instance.value_or(""));
            }
        }
    }));

    out.push_back(timed("duality", [&](SuiteResult& r) {
        for (std::size_t i = 0; i < o.duality_models; ++i) {
            const Signature sig = random_signature(rng, draw(rng, 1, kMaxDualityAtoms));
            const ClassifierModel model = random_complete_model(rng, sig);
            const AtomSet s = random_subset(rng, sig.all());
            ++r.checked;
            if (!check_mhs_duality(model, s).ok()) fail(r, "duality fails at a random model");
        }
    }));
    return out;
}

}  // namespace casebcl
