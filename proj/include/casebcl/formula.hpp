#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "casebcl/atoms.hpp"
#include "casebcl/term.hpp"

namespace casebcl {

// Immutable formula of the classifier language over a signature's atoms.
// Only five node kinds exist; ∨, →, ↔, ⟨W⟩, ⊤ and ⊥ are built from them by
// the free functions below, so structural equality is equality of the
// expanded forms. Subformulas are shared, copies are cheap.
class Formula {
public:
    enum class Kind : std::uint8_t { Atom, Outcome, Not, And, Box };

    static Formula atom(Atom p);
    static Formula outcome(Outcome x);
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula box(AtomSet w, Formula f);

    Kind kind() const { return node_->kind; }
    Atom atom_index() const { return node_->atom; }
    Outcome outcome_value() const { return node_->outcome; }
    AtomSet box_atoms() const { return node_->box; }
    // Operand of Not and Box, left conjunct of And.
    const Formula& operand() const { return node_->children.front(); }
    const Formula& lhs() const { return node_->children.front(); }
    const Formula& rhs() const { return node_->children.back(); }

    // Node count of the tree (shared subformulas counted per occurrence).
    std::size_t size() const;
    // Atoms mentioned anywhere, box sets included.
    AtomSet atoms_used() const;

    friend bool operator==(const Formula& a, const Formula& b);

    // Identity of the underlying node; usable as a memo key.
    const void* id() const { return node_.get(); }

private:
    struct Node {
        Kind kind;
        Atom atom = 0;
        Outcome outcome = Outcome::Undecided;
        AtomSet box;
        std::vector<Formula> children;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

inline Formula atom(Atom p) { return Formula::atom(p); }
inline Formula outcome(Outcome x) { return Formula::outcome(x); }
inline Formula lnot(Formula f) { return Formula::negation(std::move(f)); }
inline Formula land(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
inline Formula box(AtomSet w, Formula f) { return Formula::box(w, std::move(f)); }

// ¬(¬a ∧ ¬b)
Formula lor(Formula a, Formula b);
// ¬(a ∧ ¬b)
Formula implies(Formula a, Formula b);
// (a → b) ∧ (b → a)
Formula iff(Formula a, Formula b);
// ¬[w]¬f
Formula diamond(AtomSet w, Formula f);
// t(1) → t(1)
Formula top();
// t(1) ∧ ¬t(1)
Formula bottom();

// Left-nested conjunction; ⊤ when empty.
Formula big_and(std::span<const Formula> fs);
// Left-nested disjunction; ⊥ when empty.
Formula big_or(std::span<const Formula> fs);

// Positive literals in atom order, then negative ones; ⊤ for the empty term.
Formula term_to_formula(const Term& t);

// Full description of valuation s over the whole signature.
Formula describe_state(AtomSet s, const Signature& sig);

// Canonical text: every binary connective parenthesized, left-nested ∧ / ∨
// chains flattened, ¬[W]¬φ shown as <W> φ, ¬(a ∧ ¬b) as (a -> b) and
// ¬(¬a ∧ ¬b) as (a | b). parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f, const Signature& sig);

// Grammar (whitespace-insensitive):
//   formula := iff
//   iff     := imp ("<->" imp)*          left-assoc
//   imp     := or ("->" imp)?            right-assoc
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "[" atoms "]" unary | "<" atoms ">" unary | prim
//   prim    := IDENT | "t(1)" | "t(0)" | "t(?)" | "true" | "false" | "(" formula ")"
//   atoms   := [ IDENT ("," IDENT)* ] | "∅"
// "¬ ∧ ∨ → ↔ ⟨ ⟩" are accepted for "~ & | -> <-> < >".
// Throws ParseError with the byte offset of the offending token.
Formula parse_formula(std::string_view text, const Signature& sig);

}  // namespace casebcl
