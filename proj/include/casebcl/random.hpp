#pragma once

#include <cstdint>
#include <random>

#include "casebcl/casebase.hpp"
#include "casebcl/formula.hpp"
#include "casebcl/model.hpp"

namespace casebcl {

// Generators for the randomized self-test suites. All draws come from the
// caller's engine, so a fixed seed reproduces a run.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20230901;

// Factors named p1.. and d1..
Signature make_signature(std::size_t plaintiff, std::size_t defendant);
// A signature of exactly `atoms` factors with a uniformly drawn split.
Signature random_signature(Rng& rng, std::size_t atoms);

AtomSet random_subset(Rng& rng, AtomSet of);

// Well-formed precedent: reason ⊆ facts ∩ pro-side.
Precedent random_precedent(Rng& rng, const Signature& sig, std::string id);
// Result-model precedent: reason = facts ∩ pro-side.
Precedent random_result_precedent(Rng& rng, const Signature& sig, std::string id);
CaseBase random_case_base(Rng& rng, const Signature& sig, std::size_t max_cases);
// Draws bases until one is consistent.
CaseBase random_consistent_case_base(Rng& rng, const Signature& sig, std::size_t max_cases);

// Random formula of bounded depth over sig's atoms, outcome atoms and every
// derived connective.
Formula random_formula(Rng& rng, const Signature& sig, int depth);

// Complete model with independently drawn decisions.
ClassifierModel random_complete_model(Rng& rng, const Signature& sig);
// Model over a random non-empty subset of the valuations.
ClassifierModel random_model(Rng& rng, const Signature& sig);

// Every well-formed precedent over sig, in a fixed order (ids c0, c1, ...).
std::vector<Precedent> all_precedents(const Signature& sig);

}  // namespace casebcl
