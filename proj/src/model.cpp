#include "casebcl/model.hpp"

#include <bit>

#include "casebcl/errors.hpp"

namespace casebcl {

namespace {

constexpr std::uint64_t kAtomPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::size_t word_count(std::size_t atoms) { return atoms <= 6 ? 1 : std::size_t{1} << (atoms - 6); }

std::uint64_t low_mask(std::size_t atoms) {
    return atoms >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::size_t{1} << atoms)) - 1;
}

constexpr std::uint8_t kAbsent = 3;

}  // namespace

StateSet StateSet::none(std::size_t atoms) {
    if (atoms > kMaxModelAtoms) throw CapacityError("state set over too many atoms", kMaxModelAtoms);
    StateSet s;
    s.atoms_ = atoms;
    s.words_.assign(word_count(atoms), 0);
    return s;
}

StateSet StateSet::universe(std::size_t atoms) {
    StateSet s = none(atoms);
    for (auto& w : s.words_) w = low_mask(atoms);
    return s;
}

StateSet StateSet::with_atom(std::size_t atoms, Atom p) {
    StateSet s = none(atoms);
    if (p < 6) {
        for (auto& w : s.words_) w = kAtomPattern[p] & low_mask(atoms);
    } else {
        const std::size_t stride = std::size_t{1} << (p - 6);
        for (std::size_t i = 0; i < s.words_.size(); ++i) {
            if (i & stride) s.words_[i] = ~std::uint64_t{0};
        }
    }
    return s;
}

bool StateSet::empty() const {
    for (auto w : words_) {
        if (w) return false;
    }
    return true;
}

std::size_t StateSet::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool StateSet::subset_of(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
}

StateSet& StateSet::operator&=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

StateSet& StateSet::operator|=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

StateSet& StateSet::subtract(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

StateSet StateSet::complement() const {
    StateSet out = *this;
    const std::uint64_t mask = low_mask(atoms_);
    for (auto& w : out.words_) w = ~w & mask;
    return out;
}

StateSet& StateSet::spread_up(Atom p) {
    if (p < 6) {
        const unsigned shift = 1U << p;
        for (auto& w : words_) w |= (w & ~kAtomPattern[p]) << shift;
    } else {
        const std::size_t stride = std::size_t{1} << (p - 6);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (!(i & stride)) words_[i | stride] |= words_[i];
        }
    }
    return *this;
}

StateSet& StateSet::spread_down(Atom p) {
    if (p < 6) {
        const unsigned shift = 1U << p;
        for (auto& w : words_) w |= (w & kAtomPattern[p]) >> shift;
    } else {
        const std::size_t stride = std::size_t{1} << (p - 6);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (i & stride) words_[i & ~stride] |= words_[i];
        }
    }
    return *this;
}

std::vector<AtomSet> StateSet::members() const {
    std::vector<AtomSet> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
            out.emplace_back((i << 6) | static_cast<std::uint64_t>(std::countr_zero(w)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

ClassifierModel::ClassifierModel(Signature sig, std::span<const std::pair<AtomSet, Outcome>> decisions)
    : sig_(std::move(sig)) {
    if (sig_.size() > kMaxModelAtoms) throw CapacityError("classifier model over too many atoms", kMaxModelAtoms);
    if (decisions.empty()) throw UsageError("a classifier model needs at least one state");
    table_.assign(std::size_t{1} << sig_.size(), kAbsent);
    for (const auto& [s, x] : decisions) {
        if (!s.subset_of(sig_.all())) throw UsageError("state contains a factor outside the signature");
        auto& slot = table_[s.bits()];
        if (slot != kAbsent) throw UsageError("state listed twice in classifier model");
        slot = static_cast<std::uint8_t>(x);
    }
    finish();
}

ClassifierModel ClassifierModel::complete(Signature sig, const std::function<Outcome(AtomSet)>& fn) {
    if (sig.size() > kMaxModelAtoms) throw CapacityError("classifier model over too many atoms", kMaxModelAtoms);
    ClassifierModel m;
    m.sig_ = std::move(sig);
    m.table_.resize(std::size_t{1} << m.sig_.size());
    for (std::size_t i = 0; i < m.table_.size(); ++i) m.table_[i] = static_cast<std::uint8_t>(fn(AtomSet(i)));
    m.finish();
    return m;
}

ClassifierModel ClassifierModel::complete(Signature sig, std::span<const Outcome> decisions) {
    if (sig.size() > kMaxModelAtoms) throw CapacityError("classifier model over too many atoms", kMaxModelAtoms);
    if (decisions.size() != (std::size_t{1} << sig.size())) {
        throw UsageError("complete model needs one decision per valuation");
    }
    return complete(std::move(sig), [&](AtomSet s) { return decisions[s.bits()]; });
}

void ClassifierModel::finish() {
    const std::size_t n = sig_.size();
    states_ = StateSet::none(n);
    for (auto& b : by_outcome_) b = StateSet::none(n);
    count_ = 0;
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (table_[i] == kAbsent) continue;
        states_.set(AtomSet(i));
        by_outcome_[table_[i]].set(AtomSet(i));
        ++count_;
    }
}

bool ClassifierModel::contains(AtomSet s) const {
    return s.subset_of(sig_.all()) && table_[s.bits()] != kAbsent;
}

Outcome ClassifierModel::decision(AtomSet s) const {
    if (!contains(s)) throw UsageError("valuation is not a state of the model");
    return static_cast<Outcome>(table_[s.bits()]);
}

std::vector<AtomSet> ClassifierModel::states() const { return states_.members(); }

// ---------------------------------------------------------------------------

namespace {

StateSet eval(const ClassifierModel& m, const Formula& f) {
    const std::size_t n = m.signature().size();
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            if (f.atom_index() >= n) throw UsageError("formula mentions an atom outside the model's signature");
            StateSet r = StateSet::with_atom(n, f.atom_index());
            r &= m.state_set();
            return r;
        }
        case Formula::Kind::Outcome: return m.decided(f.outcome_value());
        case Formula::Kind::Not: {
            StateSet r = m.state_set();
            r.subtract(eval(m, f.operand()));
            return r;
        }
        case Formula::Kind::And: {
            StateSet r = eval(m, f.lhs());
            if (r.empty()) return r;
            r &= eval(m, f.rhs());
            return r;
        }
        case Formula::Kind::Box: {
            const AtomSet w = f.box_atoms();
            if (!w.subset_of(m.signature().all())) {
                throw UsageError("modality mentions an atom outside the model's signature");
            }
            // States that see a φ-failure through the W-equivalence.
            StateSet bad = m.state_set();
            bad.subtract(eval(m, f.operand()));
            if (bad.empty()) return m.state_set();
            if (w.empty()) return StateSet::none(n);
            for (Atom p : (m.signature().all() - w).members()) bad.spread_up(p).spread_down(p);
            StateSet r = m.state_set();
            r.subtract(bad);
            return r;
        }
    }
    throw UsageError("unknown formula kind");
}

}  // namespace

StateSet truth_set(const ClassifierModel& model, const Formula& f) { return eval(model, f); }

bool satisfies(const ClassifierModel& model, AtomSet s, const Formula& f) {
    if (!model.contains(s)) throw UsageError("satisfaction is evaluated at a state of the model");
    return eval(model, f).test(s);
}

bool holds_everywhere(const ClassifierModel& model, const Formula& f) {
    return model.state_set().subset_of(eval(model, f));
}

bool check_compl(const ClassifierModel& model) {
    return model.state_count() == (std::size_t{1} << model.signature().size());
}

bool check_2mon(const ClassifierModel& model) {
    const Signature& sig = model.signature();
    for (Outcome x : {Outcome::Plaintiff, Outcome::Defendant}) {
        StateSet reach = model.decided(x);
        if (reach.empty()) continue;
        for (Atom p : sig.side(x).members()) reach.spread_up(p);
        for (Atom p : sig.side(opposite(x)).members()) reach.spread_down(p);
        reach &= model.state_set();
        if (!reach.subset_of(model.decided(x))) return false;
    }
    return true;
}

Formula build_compl(const Signature& sig, std::size_t bound) {
    if (sig.size() > bound) throw CapacityError("Compl formula requested over too many atoms", bound);
    std::vector<Formula> parts;
    for_each_subset(sig.all(), [&](AtomSet s) { parts.push_back(diamond(AtomSet{}, describe_state(s, sig))); });
    return big_and(parts);
}

Formula build_2mon(const Signature& sig, std::size_t bound) {
    if (sig.size() > bound) throw CapacityError("2Mon formula requested over too many atoms", bound);
    std::vector<Formula> parts;
    for (Outcome x : {Outcome::Plaintiff, Outcome::Defendant}) {
        const AtomSet pro = sig.side(x);
        const AtomSet con = sig.side(opposite(x));
        const Formula tx = outcome(x);
        for_each_subset(pro, [&](AtomSet xs) {
            for_each_subset(con, [&](AtomSet ys) {
                Formula premise = diamond(AtomSet{}, land(describe_state(xs | ys, sig), tx));
                std::vector<Formula> forced;
                for_each_subset(pro - xs, [&](AtomSet extra) {
                    for_each_subset(ys, [&](AtomSet fewer) {
                        forced.push_back(box(AtomSet{}, implies(describe_state(xs | extra | fewer, sig), tx)));
                    });
                });
                parts.push_back(implies(premise, big_and(forced)));
            });
        });
    }
    return big_and(parts);
}

}  // namespace casebcl
