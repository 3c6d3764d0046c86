#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casebcl/enumerate.hpp"
#include "casebcl/random.hpp"

namespace casebcl {

// Instances of the axiom schemata of the classifier logic.
Formula axiom_k(const Formula& phi, const Formula& psi);  // ([∅]φ ∧ [∅](φ → ψ)) → [∅]ψ
Formula axiom_t(const Formula& phi);                      // [∅]φ → φ
Formula axiom_4(const Formula& phi);                      // [∅]φ → [∅][∅]φ
Formula axiom_b(const Formula& phi);                      // φ → [∅]⟨∅⟩φ
// [X]φ ↔ ⋀_{Y⊆X} (conj_Y^X → [∅](conj_Y^X → φ))
Formula axiom_red(AtomSet x, const Formula& phi);
// ⋁_{x∈Val} t(x), disjuncts in the given order
Formula axiom_at_least(const Outcome (&order)[3]);
// t(x) → ¬t(y), x ≠ y
Formula axiom_at_most(Outcome x, Outcome y);
// ⋀_{Y⊆Atm0} ((conj_Y ∧ t(x)) → [∅](conj_Y → t(x)))
Formula axiom_funct(Outcome x, const Signature& sig);

struct SchemaResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::optional<std::string> failed_instance;
    std::optional<PointedModel> countermodel;
};

struct AxiomReport {
    std::vector<SchemaResult> schemata;  // K, T, 4, B, Red, AtLeast, AtMost, Funct, Nec

    bool ok() const;
};

// Draws `instances` instances of every schema (subformulas of depth <= depth
// over sig) and decides validity over all classifier models by enumeration.
// The Nec row re-checks [∅]φ for every instance found valid.
AxiomReport check_axiom_suite(const Signature& sig, Rng& rng, std::size_t instances = 50, int depth = 2);

}  // namespace casebcl
