#pragma once

#include <string>

#include "casebcl/atoms.hpp"

namespace casebcl {

// A consistent conjunction of input literals. The empty term is ⊤.
class Term {
public:
    Term() = default;
    // Throws UsageError when positive and negative overlap.
    Term(AtomSet positive, AtomSet negative);

    // The literals of s over the atoms in `over`.
    static Term of_state(AtomSet s, AtomSet over) { return Term(s & over, over - s); }

    AtomSet positive() const { return positive_; }
    AtomSet negative() const { return negative_; }
    AtomSet atoms() const { return positive_ | negative_; }
    std::size_t size() const { return atoms().size(); }
    bool is_top() const { return atoms().empty(); }

    bool holds_at(AtomSet s) const { return positive_.subset_of(s) && !negative_.intersects(s); }
    // Every literal of this term occurs in other.
    bool part_of(const Term& other) const {
        return positive_.subset_of(other.positive_) && negative_.subset_of(other.negative_);
    }
    Term without(Atom a) const { return Term(positive_.without(a), negative_.without(a)); }

    bool operator==(const Term&) const = default;

private:
    AtomSet positive_;
    AtomSet negative_;
};

// ⋀_{p∈x} p ∧ ⋀_{p∈y∖x} ¬p; throws UsageError unless x ⊆ y.
Term mk_conj(AtomSet x, AtomSet y);

inline bool term_holds(AtomSet s, const Term& t) { return t.holds_at(s); }
inline bool term_subset(const Term& a, const Term& b) { return a.part_of(b); }

// Reporting order: literal sequences compared per atom, positive before
// negative.
bool term_less(const Term& a, const Term& b);

// "pi1 & ~delta2", positives first; "true" for ⊤.
std::string to_string(const Term& t, const Signature& sig);

}  // namespace casebcl
