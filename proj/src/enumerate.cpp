#include "casebcl/enumerate.hpp"

#include <map>
#include <mutex>

#include "casebcl/errors.hpp"

namespace casebcl {

namespace {

void check_bound(const Signature& sig, std::size_t bound) {
    if (bound > kMaxEnumerationAtoms) {
        throw CapacityError("enumeration bound exceeds the supported maximum", kMaxEnumerationAtoms);
    }
    if (sig.size() > bound) throw CapacityError("model enumeration over too many atoms", bound);
}

// Advances a base-3 counter; false once it wraps around.
bool next_decisions(std::vector<Outcome>& d) {
    for (auto& x : d) {
        if (x != Outcome::Undecided) {
            x = static_cast<Outcome>(static_cast<int>(x) + 1);
            return true;
        }
        x = Outcome::Defendant;
    }
    return false;
}

// Complete decision tables passing 2Mon depend only on the side sizes.
const std::vector<std::vector<Outcome>>& two_mon_tables(const Signature& sig) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Outcome>>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(sig.plaintiff_count(), sig.defendant_count());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<Outcome>> tables;
    std::vector<Outcome> d(std::size_t{1} << sig.size(), Outcome::Defendant);
    do {
        if (check_2mon(ClassifierModel::complete(sig, d))) tables.push_back(d);
    } while (next_decisions(d));
    return cache.emplace(key, std::move(tables)).first->second;
}

}  // namespace

void for_each_model(const Signature& sig, ModelClass cls, const std::function<bool(const ClassifierModel&)>& fn,
                    std::size_t bound) {
    check_bound(sig, bound);
    if (cls == ModelClass::CMPrec) {
        for (const auto& table : two_mon_tables(sig)) {
            if (!fn(ClassifierModel::complete(sig, table))) return;
        }
        return;
    }
    const std::size_t valuations = std::size_t{1} << sig.size();
    const std::uint64_t last_mask = (std::uint64_t{1} << valuations) - 1;
    std::vector<std::pair<AtomSet, Outcome>> decisions;
    for (std::uint64_t mask = 1; mask <= last_mask; ++mask) {
        decisions.clear();
        for (std::size_t i = 0; i < valuations; ++i) {
            if ((mask >> i) & 1U) decisions.emplace_back(AtomSet(i), Outcome::Defendant);
        }
        while (true) {
            if (!fn(ClassifierModel(sig, decisions))) return;
            bool advanced = false;
            for (auto& [s, x] : decisions) {
                if (x != Outcome::Undecided) {
                    x = static_cast<Outcome>(static_cast<int>(x) + 1);
                    advanced = true;
                    break;
                }
                x = Outcome::Defendant;
            }
            if (!advanced) break;
        }
    }
}

SatResult is_satisfiable_tiny(const Formula& f, const Signature& sig, ModelClass cls, std::size_t bound) {
    SatResult result;
    for_each_model(
        sig, cls,
        [&](const ClassifierModel& m) {
            StateSet truth = truth_set(m, f);
            if (truth.empty()) return true;
            result.satisfiable = true;
            result.witness = PointedModel{m, truth.members().front()};
            return false;
        },
        bound);
    return result;
}

ValidityResult is_valid_tiny(const Formula& f, const Signature& sig, ModelClass cls, std::size_t bound) {
    auto sat = is_satisfiable_tiny(lnot(f), sig, cls, bound);
    return {!sat.satisfiable, std::move(sat.witness)};
}

}  // namespace casebcl
