#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace casebcl {

// Atoms are indices into a Signature's canonical order: plaintiff factors
// first, then defendant factors, each in declaration order.
using Atom = std::size_t;

inline constexpr std::size_t kMaxAtoms = 64;

// A set of atoms as a bit pattern; bit i is atom i.
class AtomSet {
public:
    constexpr AtomSet() = default;
    constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr AtomSet single(Atom a) { return AtomSet(std::uint64_t{1} << a); }
    static constexpr AtomSet first(std::size_t n) {
        return AtomSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(Atom a) const { return (bits_ >> a) & 1U; }
    constexpr bool subset_of(AtomSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(AtomSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr AtomSet with(Atom a) const { return AtomSet(bits_ | (std::uint64_t{1} << a)); }
    constexpr AtomSet without(Atom a) const { return AtomSet(bits_ & ~(std::uint64_t{1} << a)); }

    constexpr AtomSet operator|(AtomSet o) const { return AtomSet(bits_ | o.bits_); }
    constexpr AtomSet operator&(AtomSet o) const { return AtomSet(bits_ & o.bits_); }
    constexpr AtomSet operator-(AtomSet o) const { return AtomSet(bits_ & ~o.bits_); }
    constexpr AtomSet& operator|=(AtomSet o) { bits_ |= o.bits_; return *this; }
    constexpr AtomSet& operator&=(AtomSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const AtomSet&) const = default;

    // Members in ascending atom order.
    std::vector<Atom> members() const;

private:
    std::uint64_t bits_ = 0;
};

// Lexicographic order on the ascending member sequences ({0,1,3} < {0,3}).
// Used wherever a deterministic "least" state or witness is reported.
bool lex_less(AtomSet a, AtomSet b);

// Lexicographically least set in the interval [lower, upper]. Requires
// lower ⊆ upper.
AtomSet lex_least_between(AtomSet lower, AtomSet upper);

// Calls fn(subset) for every subset of mask, starting from the empty set and
// ascending in numeric order.
template <typename Fn>
void for_each_subset(AtomSet mask, Fn&& fn) {
    std::uint64_t m = mask.bits();
    std::uint64_t sub = 0;
    while (true) {
        fn(AtomSet(sub));
        if (sub == m) break;
        sub = (sub - m) & m;
    }
}

enum class Outcome : std::uint8_t { Defendant = 0, Plaintiff = 1, Undecided = 2 };

inline constexpr Outcome kAllOutcomes[] = {Outcome::Plaintiff, Outcome::Defendant, Outcome::Undecided};

// opposite(1) = 0 and opposite(0) = 1; throws UsageError for ?.
Outcome opposite(Outcome x);

// "1", "0" or "?".
std::string_view to_string(Outcome x);
std::optional<Outcome> outcome_from_string(std::string_view text);

// Plaintiff and defendant factor vocabularies.
class Signature {
public:
    Signature() = default;

    // Throws UsageError on empty names, duplicates (after alias
    // normalization) or more than kMaxAtoms factors.
    Signature(std::vector<std::string> plaintiff, std::vector<std::string> defendant);

    std::size_t size() const { return names_.size(); }
    std::size_t plaintiff_count() const { return plaintiff_count_; }
    std::size_t defendant_count() const { return names_.size() - plaintiff_count_; }

    AtomSet all() const { return AtomSet::first(size()); }
    AtomSet plaintiff() const { return AtomSet::first(plaintiff_count_); }
    AtomSet defendant() const { return all() - plaintiff(); }
    // Factors favoring x; x must be 1 or 0.
    AtomSet side(Outcome x) const;

    const std::string& name(Atom a) const { return names_.at(a); }
    const std::vector<std::string>& names() const { return names_; }

    // Looks a factor up by name. Exact matches win; otherwise a leading
    // "π"/"δ" is read as "pi"/"delta" on both sides.
    std::optional<Atom> find(std::string_view name) const;
    Atom index(std::string_view name) const;
    AtomSet set_of(std::span<const std::string> names) const;
    std::vector<std::string> names_of(AtomSet s) const;

    bool operator==(const Signature&) const = default;

private:
    std::vector<std::string> names_;
    std::size_t plaintiff_count_ = 0;
};

// "π1" -> "pi1", "δ2" -> "delta2"; other names are returned unchanged.
std::string normalize_factor_alias(std::string_view name);

}  // namespace casebcl
