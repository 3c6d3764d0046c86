#include "casebcl/atoms.hpp"

#include <algorithm>
#include <unordered_set>

#include "casebcl/errors.hpp"

namespace casebcl {

std::vector<Atom> AtomSet::members() const {
    std::vector<Atom> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        out.push_back(static_cast<Atom>(std::countr_zero(b)));
    }
    return out;
}

bool lex_less(AtomSet a, AtomSet b) {
    auto am = a.members();
    auto bm = b.members();
    return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

AtomSet lex_least_between(AtomSet lower, AtomSet upper) {
    if (!lower.subset_of(upper)) throw UsageError("lex_least_between: lower bound not contained in upper bound");
    if (lower.empty()) return lower;
    // Optional members smaller than the largest required member shorten the
    // sequence's prefix comparison; anything larger would only lengthen it.
    const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(lower.bits()));
    return lower | AtomSet((upper - lower).bits() & (top - 1));
}

Outcome opposite(Outcome x) {
    switch (x) {
        case Outcome::Plaintiff: return Outcome::Defendant;
        case Outcome::Defendant: return Outcome::Plaintiff;
        case Outcome::Undecided: break;
    }
    throw UsageError("opposite is undefined for outcome ?");
}

std::string_view to_string(Outcome x) {
    switch (x) {
        case Outcome::Plaintiff: return "1";
        case Outcome::Defendant: return "0";
        case Outcome::Undecided: return "?";
    }
    return "?";
}

std::optional<Outcome> outcome_from_string(std::string_view text) {
    if (text == "1") return Outcome::Plaintiff;
    if (text == "0") return Outcome::Defendant;
    if (text == "?") return Outcome::Undecided;
    return std::nullopt;
}

std::string normalize_factor_alias(std::string_view name) {
    constexpr std::string_view kPi = "\xCF\x80";     // π
    constexpr std::string_view kDelta = "\xCE\xB4";  // δ
    if (name.starts_with(kPi)) return "pi" + std::string(name.substr(kPi.size()));
    if (name.starts_with(kDelta)) return "delta" + std::string(name.substr(kDelta.size()));
    return std::string(name);
}

Signature::Signature(std::vector<std::string> plaintiff, std::vector<std::string> defendant)
    : plaintiff_count_(plaintiff.size()) {
    if (plaintiff.size() + defendant.size() > kMaxAtoms) {
        throw UsageError("signature has more than " + std::to_string(kMaxAtoms) + " factors");
    }
    names_ = std::move(plaintiff);
    names_.insert(names_.end(), std::make_move_iterator(defendant.begin()),
                  std::make_move_iterator(defendant.end()));
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw UsageError("factor names must be non-empty");
        if (!seen.insert(normalize_factor_alias(n)).second) {
            throw UsageError("factor '" + n + "' declared twice (plaintiff and defendant sets must be disjoint)");
        }
    }
}

AtomSet Signature::side(Outcome x) const {
    switch (x) {
        case Outcome::Plaintiff: return plaintiff();
        case Outcome::Defendant: return defendant();
        case Outcome::Undecided: break;
    }
    throw UsageError("no factor side favors outcome ?");
}

std::optional<Atom> Signature::find(std::string_view name) const {
    for (Atom a = 0; a < names_.size(); ++a) {
        if (names_[a] == name) return a;
    }
    const std::string wanted = normalize_factor_alias(name);
    for (Atom a = 0; a < names_.size(); ++a) {
        if (normalize_factor_alias(names_[a]) == wanted) return a;
    }
    return std::nullopt;
}

Atom Signature::index(std::string_view name) const {
    if (auto a = find(name)) return *a;
    throw UsageError("unknown factor '" + std::string(name) + "'");
}

AtomSet Signature::set_of(std::span<const std::string> names) const {
    AtomSet s;
    for (const auto& n : names) s = s.with(index(n));
    return s;
}

std::vector<std::string> Signature::names_of(AtomSet s) const {
    std::vector<std::string> out;
    for (Atom a : s.members()) out.push_back(name(a));
    return out;
}

}  // namespace casebcl
