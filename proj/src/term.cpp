#include "casebcl/term.hpp"

#include <algorithm>
#include <vector>

#include "casebcl/errors.hpp"

namespace casebcl {

Term::Term(AtomSet positive, AtomSet negative) : positive_(positive), negative_(negative) {
    if (positive.intersects(negative)) throw UsageError("term contains an atom and its negation");
}

Term mk_conj(AtomSet x, AtomSet y) {
    if (!x.subset_of(y)) throw UsageError("mk_conj: positive set must be contained in the described set");
    return Term(x, y - x);
}

bool term_less(const Term& a, const Term& b) {
    auto key = [](const Term& t) {
        std::vector<std::size_t> k;
        for (Atom p : t.atoms().members()) k.push_back(2 * p + (t.negative().contains(p) ? 1 : 0));
        return k;
    };
    auto ka = key(a);
    auto kb = key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
}

std::string to_string(const Term& t, const Signature& sig) {
    if (t.is_top()) return "true";
    std::string out;
    auto append = [&](std::string lit) {
        if (!out.empty()) out += " & ";
        out += lit;
    };
    for (Atom p : t.positive().members()) append(sig.name(p));
    for (Atom p : t.negative().members()) append("~" + sig.name(p));
    return out;
}

}  // namespace casebcl
