#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casebcl/random.hpp"

namespace casebcl {

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;
    double seconds = 0.0;

    bool ok() const { return failures == 0; }
};

struct SelftestOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t max_atoms = 6;            // case bases for the proposition suites
    std::size_t consistency_bases = 300;  // at 2 and 3 atoms
    std::size_t proposition_bases = 200;
    std::size_t axiom_instances = 20;
    std::size_t duality_models = 100;
};

// Randomized internal-agreement suites: consistency vs canonical model vs
// CM^prec satisfiability, propositions 2-6, axiom schemata, AXp/CXp duality.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

}  // namespace casebcl
