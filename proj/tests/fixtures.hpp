#pragma once

#include <initializer_list>
#include <string>

#include "casebcl/casebase.hpp"

namespace fixtures {

inline casebcl::Signature trade_secrets_signature() {
    return casebcl::Signature({"pi1", "pi2", "pi3"}, {"delta1", "delta2", "delta3"});
}

inline casebcl::AtomSet facts(const casebcl::Signature& sig, std::initializer_list<const char*> names) {
    casebcl::AtomSet s;
    for (const char* n : names) s = s.with(sig.index(n));
    return s;
}

inline casebcl::Precedent make_case(const casebcl::Signature& sig, std::string id,
                                    std::initializer_list<const char*> f, std::initializer_list<const char*> r,
                                    casebcl::Outcome x) {
    return {std::move(id), facts(sig, f), facts(sig, r), x};
}

// Two precedents: c1 decided for the plaintiff on {pi1}, c2 for the
// defendant on {delta3}.
inline casebcl::CaseBase trade_secrets() {
    const auto sig = trade_secrets_signature();
    return casebcl::CaseBase(
        sig, {make_case(sig, "c1", {"pi1", "pi3", "delta1", "delta3"}, {"pi1"}, casebcl::Outcome::Plaintiff),
              make_case(sig, "c2", {"pi2", "delta1", "delta3"}, {"delta3"}, casebcl::Outcome::Defendant)});
}

// Decided for the defendant on {delta1}; conflicts with c1.
inline casebcl::Precedent conflicting_case() {
    const auto sig = trade_secrets_signature();
    return make_case(sig, "c3", {"pi1", "pi2", "delta1"}, {"delta1"}, casebcl::Outcome::Defendant);
}

}  // namespace fixtures
