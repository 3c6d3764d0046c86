#pragma once

#include <functional>
#include <optional>

#include "casebcl/formula.hpp"
#include "casebcl/model.hpp"

namespace casebcl {

// Exhaustive model-space search runs over at most this many atoms: 4^8
// classifier models (or 3^8 complete decision functions) at the bound.
inline constexpr std::size_t kMaxEnumerationAtoms = 3;

enum class ModelClass { CM, CMPrec };

struct PointedModel {
    ClassifierModel model;
    AtomSet state;
};

struct SatResult {
    bool satisfiable = false;
    std::optional<PointedModel> witness;
};

struct ValidityResult {
    bool valid = true;
    std::optional<PointedModel> countermodel;
};

// Visits every model of the class over sig until fn returns false.
// CM: every non-empty state set (ascending bit pattern), every decision
// function (base-3 counter, first state least significant).
// CMPrec: complete models whose decision function passes check_2mon, same
// counter order.
// Throws CapacityError when sig exceeds `bound` or bound exceeds
// kMaxEnumerationAtoms.
void for_each_model(const Signature& sig, ModelClass cls, const std::function<bool(const ClassifierModel&)>& fn,
                    std::size_t bound = kMaxEnumerationAtoms);

// Exact decision by enumeration; the witness is the first one found in
// enumeration order, at its numerically least satisfying state.
SatResult is_satisfiable_tiny(const Formula& f, const Signature& sig, ModelClass cls,
                              std::size_t bound = kMaxEnumerationAtoms);
ValidityResult is_valid_tiny(const Formula& f, const Signature& sig, ModelClass cls,
                             std::size_t bound = kMaxEnumerationAtoms);

}  // namespace casebcl
