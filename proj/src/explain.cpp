#include "casebcl/explain.hpp"

#include <algorithm>

#include "casebcl/bridge.hpp"
#include "casebcl/enumerate.hpp"
#include "casebcl/errors.hpp"

namespace casebcl {

std::string_view to_string(ExplanationKind k) {
    switch (k) {
        case ExplanationKind::PImp: return "pimp";
        case ExplanationKind::AXp: return "axp";
        case ExplanationKind::WAXp: return "waxp";
        case ExplanationKind::CXp: return "cxp";
        case ExplanationKind::WCXp: return "wcxp";
    }
    return "pimp";
}

std::optional<ExplanationKind> explanation_kind_from_string(std::string_view text) {
    for (auto k : {ExplanationKind::PImp, ExplanationKind::AXp, ExplanationKind::WAXp, ExplanationKind::CXp,
                   ExplanationKind::WCXp}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

namespace {

void require_term(const ClassifierModel& model, const Term& t) {
    if (!t.atoms().subset_of(model.signature().all())) {
        throw UsageError("term mentions a factor outside the model's signature");
    }
}

void require_state(const ClassifierModel& model, AtomSet s) {
    if (!model.contains(s)) throw UsageError("explanations are evaluated at a state of the model");
}

void require_bound(const ClassifierModel& model, std::size_t bound, std::size_t cap, const char* what) {
    if (bound > cap) throw CapacityError(std::string(what) + ": bound exceeds the supported maximum", cap);
    if (model.signature().size() > bound) throw CapacityError(std::string(what) + " over too many atoms", bound);
}

// States of the model where the term holds.
StateSet term_states(const ClassifierModel& model, const Term& t) {
    const std::size_t n = model.signature().size();
    StateSet r = model.state_set();
    for (Atom p : t.positive().members()) r &= StateSet::with_atom(n, p);
    for (Atom p : t.negative().members()) r.subtract(StateSet::with_atom(n, p));
    return r;
}

// Some state agreeing with s outside `vary` is not decided x.
bool variation_escapes(const ClassifierModel& model, AtomSet s, AtomSet vary, Outcome x) {
    StateSet reach = StateSet::none(model.signature().size());
    reach.set(s);
    for (Atom p : vary.members()) reach.spread_up(p).spread_down(p);
    reach &= model.state_set();
    return !reach.subset_of(model.decided(x));
}

void sort_terms(std::vector<Term>& terms) { std::sort(terms.begin(), terms.end(), term_less); }

}  // namespace

bool is_implicant(const ClassifierModel& model, const Term& t, Outcome x) {
    require_term(model, t);
    return term_states(model, t).subset_of(model.decided(x));
}

bool is_prime_implicant(const ClassifierModel& model, const Term& t, Outcome x) {
    if (!is_implicant(model, t, x)) return false;
    for (Atom p : t.atoms().members()) {
        if (is_implicant(model, t.without(p), x)) return false;
    }
    return true;
}

bool is_waxp(const ClassifierModel& model, AtomSet s, const Term& t, Outcome x) {
    require_state(model, s);
    return t.holds_at(s) && is_implicant(model, t, x);
}

bool is_axp(const ClassifierModel& model, AtomSet s, const Term& t, Outcome x) {
    require_state(model, s);
    return t.holds_at(s) && is_prime_implicant(model, t, x);
}

bool is_wcxp(const ClassifierModel& model, AtomSet s, const Term& t, Outcome x) {
    require_state(model, s);
    require_term(model, t);
    return t.holds_at(s) && model.decision(s) == x && variation_escapes(model, s, t.atoms(), x);
}

bool is_cxp(const ClassifierModel& model, AtomSet s, const Term& t, Outcome x) {
    if (!is_wcxp(model, s, t, x)) return false;
    for (Atom p : t.atoms().members()) {
        if (variation_escapes(model, s, t.atoms().without(p), x)) return false;
    }
    return true;
}

ExplanationSet enumerate_prime_implicants(const ClassifierModel& model, Outcome x, std::size_t bound) {
    require_bound(model, bound, kMaxExplainAtoms, "prime implicant enumeration");
    const std::size_t n = model.signature().size();
    std::vector<std::size_t> pow3(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;

    // Per atom: digit 0 = negative literal, 1 = positive literal, 2 = absent.
    // A code with an absent atom is an implicant iff both of its one-atom
    // completions are; both have smaller codes.
    std::vector<std::uint8_t> implicant(pow3[n]);
    for (std::size_t code = 0; code < pow3[n]; ++code) {
        std::size_t rest = code;
        std::uint64_t state = 0;
        std::optional<std::size_t> free_atom;
        for (std::size_t i = 0; i < n; ++i, rest /= 3) {
            const std::size_t d = rest % 3;
            if (d == 2) {
                free_atom = i;
                break;
            }
            if (d == 1) state |= std::uint64_t{1} << i;
        }
        if (free_atom) {
            const std::size_t i = *free_atom;
            implicant[code] = implicant[code - 2 * pow3[i]] && implicant[code - pow3[i]];
        } else {
            const AtomSet s(state);
            implicant[code] = !model.contains(s) || model.decision(s) == x;
        }
    }

    ExplanationSet out{ExplanationKind::PImp, x, std::nullopt, {}};
    for (std::size_t code = 0; code < pow3[n]; ++code) {
        if (!implicant[code]) continue;
        bool prime = true;
        AtomSet pos;
        AtomSet neg;
        std::size_t rest = code;
        for (std::size_t i = 0; i < n; ++i, rest /= 3) {
            const std::size_t d = rest % 3;
            if (d == 2) continue;
            (d == 1 ? pos : neg) = (d == 1 ? pos : neg).with(i);
            if (implicant[code + (2 - d) * pow3[i]]) prime = false;
        }
        if (prime) out.terms.emplace_back(pos, neg);
    }
    sort_terms(out.terms);
    return out;
}

namespace {

// Implicant status of every term true at s, indexed by the term's atom set.
std::vector<std::uint8_t> local_implicants(const ClassifierModel& model, AtomSet s, Outcome x) {
    const AtomSet all = model.signature().all();
    std::vector<std::uint8_t> imp(std::size_t{1} << model.signature().size());
    for_each_subset(all, [&](AtomSet a) {
        imp[a.bits()] = term_states(model, Term::of_state(s, a)).subset_of(model.decided(x));
    });
    return imp;
}

std::vector<std::uint8_t> local_escapes(const ClassifierModel& model, AtomSet s, Outcome x) {
    const AtomSet all = model.signature().all();
    std::vector<std::uint8_t> esc(std::size_t{1} << model.signature().size());
    for_each_subset(all, [&](AtomSet a) { esc[a.bits()] = variation_escapes(model, s, a, x); });
    return esc;
}

// Members of the upward-closed family `in` (indexed by atom set), either all
// of them or only the subset-minimal ones.
std::vector<Term> collect(const std::vector<std::uint8_t>& in, AtomSet s, AtomSet all, bool minimal_only) {
    std::vector<Term> terms;
    for_each_subset(all, [&](AtomSet a) {
        if (!in[a.bits()]) return;
        if (minimal_only) {
            for (Atom p : a.members()) {
                if (in[a.without(p).bits()]) return;
            }
        }
        terms.push_back(Term::of_state(s, a));
    });
    std::sort(terms.begin(), terms.end(), term_less);
    return terms;
}

ExplanationSet local_set(ExplanationKind kind, const ClassifierModel& model, AtomSet s, Outcome x,
                         std::size_t bound) {
    require_bound(model, bound, kMaxExplainAtoms, "explanation enumeration");
    require_state(model, s);
    const AtomSet all = model.signature().all();
    ExplanationSet out{kind, x, s, {}};
    switch (kind) {
        case ExplanationKind::AXp:
        case ExplanationKind::WAXp:
            out.terms = collect(local_implicants(model, s, x), s, all, kind == ExplanationKind::AXp);
            break;
        case ExplanationKind::CXp:
        case ExplanationKind::WCXp:
            if (model.decision(s) == x) {
                out.terms = collect(local_escapes(model, s, x), s, all, kind == ExplanationKind::CXp);
            }
            break;
        case ExplanationKind::PImp: throw UsageError("prime implicants are not state-local");
    }
    return out;
}

}  // namespace

ExplanationSet enumerate_axp(const ClassifierModel& model, AtomSet s, std::size_t bound) {
    require_state(model, s);
    return local_set(ExplanationKind::AXp, model, s, model.decision(s), bound);
}

ExplanationSet enumerate_waxp(const ClassifierModel& model, AtomSet s, std::size_t bound) {
    require_state(model, s);
    return local_set(ExplanationKind::WAXp, model, s, model.decision(s), bound);
}

ExplanationSet enumerate_cxp(const ClassifierModel& model, AtomSet s, std::size_t bound) {
    require_state(model, s);
    return local_set(ExplanationKind::CXp, model, s, model.decision(s), bound);
}

ExplanationSet enumerate_wcxp(const ClassifierModel& model, AtomSet s, std::size_t bound) {
    require_state(model, s);
    return local_set(ExplanationKind::WCXp, model, s, model.decision(s), bound);
}

bool explanation_holds(ExplanationKind kind, const ClassifierModel& model, std::optional<AtomSet> s,
                       const Term& t, Outcome x) {
    if (kind == ExplanationKind::PImp) return is_prime_implicant(model, t, x);
    if (!s) throw UsageError("this explanation kind needs a state");
    switch (kind) {
        case ExplanationKind::AXp: return is_axp(model, *s, t, x);
        case ExplanationKind::WAXp: return is_waxp(model, *s, t, x);
        case ExplanationKind::CXp: return is_cxp(model, *s, t, x);
        case ExplanationKind::WCXp: return is_wcxp(model, *s, t, x);
        case ExplanationKind::PImp: break;
    }
    return false;
}

Term waxp_from_reason(const Precedent& c, const Signature& sig) {
    const AtomSet con = sig.side(opposite(c.outcome));
    return mk_conj(c.reason, (c.reason | con) - (c.facts & con));
}

// ---------------------------------------------------------------------------

Formula imp_formula(const Term& t, Outcome x) { return box(AtomSet{}, implies(term_to_formula(t), outcome(x))); }

Formula pimp_formula(const Term& t, Outcome x) {
    std::vector<Formula> parts{outcome(x)};
    for (Atom p : t.atoms().members()) parts.push_back(diamond(t.atoms().without(p), lnot(outcome(x))));
    return box(AtomSet{}, implies(term_to_formula(t), big_and(parts)));
}

Formula waxp_formula(const Term& t, Outcome x) { return land(term_to_formula(t), imp_formula(t, x)); }

Formula axp_formula(const Term& t, Outcome x) { return land(term_to_formula(t), pimp_formula(t, x)); }

Formula wcxp_formula(const Term& t, Outcome x, const Signature& sig) {
    return land(land(term_to_formula(t), outcome(x)), diamond(sig.all() - t.atoms(), lnot(outcome(x))));
}

Formula cxp_formula(const Term& t, Outcome x, const Signature& sig) {
    const AtomSet rest = sig.all() - t.atoms();
    std::vector<Formula> parts{term_to_formula(t), diamond(rest, lnot(outcome(x)))};
    for (Atom p : t.atoms().members()) parts.push_back(box(rest.with(p), outcome(x)));
    return big_and(parts);
}

// ---------------------------------------------------------------------------

namespace {

ClassifierModel require_canonical(const CaseBase& cb) {
    auto built = canonical_model(cb);
    if (auto* conflict = std::get_if<ConflictReport>(&built)) {
        throw UsageError("case base is inconsistent (cases '" + conflict->forcing_plaintiff.id + "' and '" +
                         conflict->forcing_defendant.id + "' conflict)");
    }
    return std::get<ClassifierModel>(std::move(built));
}

std::string describe(const Precedent& c, const Signature& sig) {
    auto names = [&](AtomSet s) {
        std::string out = "{";
        for (const auto& n : sig.names_of(s)) out += (out.size() > 1 ? "," : "") + n;
        return out + "}";
    };
    return c.id + "=(" + names(c.facts) + "," + names(c.reason) + "," + std::string(to_string(c.outcome)) + ")";
}

}  // namespace

PropositionReport check_prop2(const CaseBase& cb) {
    const ClassifierModel model = require_canonical(cb);
    const Signature& sig = cb.signature();
    PropositionReport report{"opposite-implicants"};
    const ExplanationSet pimps[2] = {enumerate_prime_implicants(model, Outcome::Defendant),
                                     enumerate_prime_implicants(model, Outcome::Plaintiff)};
    for (const auto& c : cb.cases()) {
        const Outcome other = opposite(c.outcome);
        const AtomSet con_present = c.facts & sig.side(other);
        for (const auto& t : pimps[static_cast<std::size_t>(other)].terms) {
            ++report.checked;
            if (c.reason.intersects(t.negative()) || !t.positive().subset_of(con_present)) continue;
            report.counterexamples.push_back(describe(c, sig) + ": prime implicant " + to_string(t, sig) +
                                             " for the opposite outcome is compatible with the case");
        }
    }
    return report;
}

PropositionReport check_prop3(const CaseBase& cb) {
    const ClassifierModel model = require_canonical(cb);
    const Signature& sig = cb.signature();
    PropositionReport report{"reason-waxp"};
    for (const auto& c : cb.cases()) {
        ++report.checked;
        bool found = false;
        for_each_subset(sig.all() - c.facts, [&](AtomSet negatives) {
            if (!found && is_waxp(model, c.facts, Term(c.reason, negatives), c.outcome)) found = true;
        });
        if (!found) {
            report.counterexamples.push_back(describe(c, sig) + ": no wAXp has the reason as its positive part");
        }
    }
    return report;
}

PropositionReport check_prop4(const CaseBase& cb) {
    const ClassifierModel model = require_canonical(cb);
    const Signature& sig = cb.signature();
    PropositionReport report{"constructive-waxp"};
    for (const auto& c : cb.cases()) {
        ++report.checked;
        const Term t = waxp_from_reason(c, sig);
        if (!is_waxp(model, c.facts, t, c.outcome)) {
            report.counterexamples.push_back(describe(c, sig) + ": " + to_string(t, sig) + " is not a wAXp");
        }
    }
    return report;
}

PropositionReport check_prop5(const CaseBase& cb) {
    const ClassifierModel model = require_canonical(cb);
    const Signature& sig = cb.signature();
    PropositionReport report{"contrastive-preference"};
    for (const auto& c : cb.cases()) {
        const Outcome other = opposite(c.outcome);
        const AtomSet con_present = c.facts & sig.side(other);
        for_each_subset(sig.side(other) - c.facts, [&](AtomSet y) {
            if (!is_wcxp(model, c.facts, mk_conj(AtomSet{}, y), c.outcome)) return;
            ++report.checked;
            if (case_base_prefers(cb, c.cited(), Reason{y | con_present, other})) {
                report.counterexamples.push_back(describe(c, sig) + ": absence of " + to_string(Term({}, y), sig) +
                                                 " explains the outcome, yet the reason beats it");
            }
        });
    }
    return report;
}

PropositionReport check_prop6(const Signature& sig, std::span<const Precedent> cases) {
    if (sig.size() > kMaxEnumerationAtoms) {
        throw CapacityError("validity check over too many atoms", kMaxEnumerationAtoms);
    }
    PropositionReport report{"reason-implicant-validity"};
    for (const auto& c : cases) {
        std::vector<Formula> disjuncts;
        const Formula reason = term_to_formula(mk_conj(c.reason, c.reason));
        // Every term: positive part a subset, negative part a subset of the rest.
        for_each_subset(sig.all(), [&](AtomSet pos) {
            for_each_subset(sig.all() - pos, [&](AtomSet neg) {
                const Term t(pos, neg);
                disjuncts.push_back(land(imp_formula(t, c.outcome), implies(term_to_formula(t), reason)));
            });
        });
        const Formula claim = implies(tr2(c, sig), big_or(disjuncts));
        ++report.checked;
        if (!is_valid_tiny(claim, sig, ModelClass::CM).valid) {
            report.counterexamples.push_back(describe(c, sig) + ": implication is not valid");
        }
    }
    return report;
}

std::vector<AtomSet> minimal_hitting_sets(std::span<const AtomSet> family, AtomSet universe) {
    auto hits = [&](AtomSet h) {
        return std::all_of(family.begin(), family.end(), [&](AtomSet a) { return h.intersects(a); });
    };
    std::vector<AtomSet> out;
    for_each_subset(universe, [&](AtomSet h) {
        if (!hits(h)) return;
        for (Atom p : h.members()) {
            if (hits(h.without(p))) return;
        }
        out.push_back(h);
    });
    return out;
}

DualityReport check_mhs_duality(const ClassifierModel& model, AtomSet s, std::size_t bound) {
    require_bound(model, bound, kMaxDualityAtoms, "hitting-set duality");
    if (!check_compl(model)) throw UsageError("hitting-set duality needs a model with every valuation as a state");
    const AtomSet all = model.signature().all();
    auto atom_sets = [](const ExplanationSet& e) {
        std::vector<AtomSet> out;
        for (const auto& t : e.terms) out.push_back(t.atoms());
        std::sort(out.begin(), out.end(), [](AtomSet a, AtomSet b) { return a.bits() < b.bits(); });
        return out;
    };
    DualityReport r;
    r.axp_atoms = atom_sets(enumerate_axp(model, s));
    r.cxp_atoms = atom_sets(enumerate_cxp(model, s));
    r.hitting_axp = minimal_hitting_sets(r.axp_atoms, all);
    r.hitting_cxp = minimal_hitting_sets(r.cxp_atoms, all);
    return r;
}

}  // namespace casebcl
