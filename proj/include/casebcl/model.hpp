#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "casebcl/atoms.hpp"
#include "casebcl/formula.hpp"

namespace casebcl {

// Explicit-state models hold one slot per valuation.
inline constexpr std::size_t kMaxModelAtoms = 20;

// Default bound for building the Compl / 2Mon formulas.
inline constexpr std::size_t kDefaultFormulaBuildAtoms = 4;

// A set of valuations over n atoms, stored as a bitset indexed by the
// valuation's bit pattern. Fits in one inline word for n <= 6.
class StateSet {
public:
    StateSet() = default;
    static StateSet none(std::size_t atoms);
    static StateSet universe(std::size_t atoms);
    // Valuations containing atom p.
    static StateSet with_atom(std::size_t atoms, Atom p);

    std::size_t atoms() const { return atoms_; }
    bool test(AtomSet s) const { return (words_[s.bits() >> 6] >> (s.bits() & 63)) & 1U; }
    void set(AtomSet s) { words_[s.bits() >> 6] |= std::uint64_t{1} << (s.bits() & 63); }
    bool empty() const;
    std::size_t count() const;
    bool subset_of(const StateSet& o) const;

    StateSet& operator&=(const StateSet& o);
    StateSet& operator|=(const StateSet& o);
    StateSet& subtract(const StateSet& o);
    // Complement relative to all 2^n valuations.
    StateSet complement() const;

    // Adds every valuation obtained by setting (up) or clearing (down) atom p
    // in a member.
    StateSet& spread_up(Atom p);
    StateSet& spread_down(Atom p);

    bool operator==(const StateSet&) const = default;

    // Members in ascending numeric order.
    std::vector<AtomSet> members() const;

private:
    std::size_t atoms_ = 0;
    boost::container::small_vector<std::uint64_t, 1> words_;
};

// A classifier model C = (S, f): a non-empty set of valuations with a total
// decision function into {1, 0, ?}.
class ClassifierModel {
public:
    // Throws UsageError on an empty state list, duplicate states or states
    // outside the signature, CapacityError above kMaxModelAtoms.
    ClassifierModel(Signature sig, std::span<const std::pair<AtomSet, Outcome>> decisions);

    // All 2^n valuations, decided by fn.
    static ClassifierModel complete(Signature sig, const std::function<Outcome(AtomSet)>& fn);
    // All 2^n valuations; decisions[i] belongs to the valuation with bit
    // pattern i.
    static ClassifierModel complete(Signature sig, std::span<const Outcome> decisions);

    const Signature& signature() const { return sig_; }
    std::size_t state_count() const { return count_; }
    bool contains(AtomSet s) const;
    // Throws UsageError when s is not a state.
    Outcome decision(AtomSet s) const;
    // Ascending numeric order.
    std::vector<AtomSet> states() const;

    const StateSet& state_set() const { return states_; }
    // States decided x.
    const StateSet& decided(Outcome x) const { return by_outcome_[static_cast<std::size_t>(x)]; }

private:
    ClassifierModel() = default;
    void finish();

    Signature sig_;
    std::vector<std::uint8_t> table_;  // kAbsent for valuations outside S
    StateSet states_;
    StateSet by_outcome_[3];
    std::size_t count_ = 0;
};

// Global model checking: every state of the model where f holds.
StateSet truth_set(const ClassifierModel& model, const Formula& f);

// (C, s) ⊨ f. Throws UsageError when s is not a state of the model.
bool satisfies(const ClassifierModel& model, AtomSet s, const Formula& f);

// f holds at every state.
bool holds_everywhere(const ClassifierModel& model, const Formula& f);

// Every valuation is a state.
bool check_compl(const ClassifierModel& model);
// Two-way monotonicity, checked semantically: whenever f(s) = x ∈ {1, 0},
// every state with at least s's x-factors and at most s's x̄-factors is
// also decided x.
bool check_2mon(const ClassifierModel& model);
inline bool in_cm_prec(const ClassifierModel& model) { return check_compl(model) && check_2mon(model); }

// The Compl and 2Mon formulas built literally. Throws CapacityError above
// `bound` atoms (the formulas grow exponentially).
Formula build_compl(const Signature& sig, std::size_t bound = kDefaultFormulaBuildAtoms);
Formula build_2mon(const Signature& sig, std::size_t bound = kDefaultFormulaBuildAtoms);

}  // namespace casebcl
