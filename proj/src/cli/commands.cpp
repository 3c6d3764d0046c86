#include "casebcl/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "casebcl/bridge.hpp"
#include "casebcl/enumerate.hpp"
#include "casebcl/errors.hpp"
#include "casebcl/explain.hpp"
#include "casebcl/io.hpp"
#include "casebcl/selftest.hpp"

namespace casebcl {

namespace {

enum class Format { Text, Json };

struct RunConfig {
    Format format = Format::Text;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::size_t> bound;

    std::string input;
    std::string facts;
    std::string case_json;
    std::string model_mode = "reason";
    std::string emit_model;
    std::string kind;
    std::string outcome;
    bool all_models = false;
    std::string state;
    std::string formula;
    std::string signature;
    bool prec = false;
};

struct Io {
    std::ostream& out;
    std::ostream& err;
    const RunConfig& cfg;

    bool json() const { return cfg.format == Format::Json; }
    void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

std::size_t bound_or(const RunConfig& cfg, std::size_t cap) {
    if (!cfg.bound) return cap;
    if (*cfg.bound > cap) throw CapacityError("--bound exceeds the supported maximum", cap);
    return *cfg.bound;
}

void print_violations(const ValidationReport& r, std::ostream& err) {
    for (const auto& v : r.warnings) err << "warning: case '" << v.case_id << "': " << v.message << '\n';
    for (const auto& v : r.errors) err << "error: case '" << v.case_id << "': " << v.message << '\n';
}

// Loads and validates a case-base file; nullopt after printing diagnostics.
std::optional<CaseBase> load_case_base(const Io& io) {
    CaseBase cb = case_base_from_json(parse_json(read_file(io.cfg.input)));
    const ValidationReport r = validate_case_base(cb);
    print_violations(r, io.err);
    if (!r.ok()) return std::nullopt;
    return cb;
}

Outcome parse_outcome_flag(const std::string& text) {
    if (text == "plaintiff") return Outcome::Plaintiff;
    if (text == "defendant") return Outcome::Defendant;
    auto x = outcome_from_string(text);
    if (!x) throw UsageError("--outcome must be 1, 0 or ?");
    return *x;
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw FormatError("cannot write '" + path + "'");
        f << content;
        if (!f) throw FormatError("cannot write '" + path + "'");
    }
    std::filesystem::rename(tmp, path);
}

int report_witness(const Io& io, const CaseBase& cb, const ConflictWitness& w, Json j) {
    if (io.json()) {
        j["witness"] = to_json(w, cb.signature());
        io.emit(j);
    } else {
        io.out << render_text(w, cb.signature());
    }
    return kExitNegative;
}

// ---------------------------------------------------------------------------

int cmd_check(const Io& io) {
    auto cb = load_case_base(io);
    if (!cb) return kExitError;
    const auto witness = conflict_witness(*cb);
    if (cb->signature().size() <= kMaxModelAtoms && theorem1_decide(*cb) != !witness) {
        io.err << "internal error: consistency verdicts disagree\n";
        return kExitError;
    }
    if (witness) {
        if (!io.json()) io.out << "inconsistent\n";
        return report_witness(io, *cb, *witness, Json{{"consistent", false}});
    }
    if (io.json()) {
        io.emit(Json{{"consistent", true}, {"cases", cb->size()}});
    } else {
        io.out << "consistent (" << cb->size() << " cases)\n";
    }
    return kExitPositive;
}

int cmd_decide(const Io& io) {
    auto cb = load_case_base(io);
    if (!cb) return kExitError;
    const AtomSet s = parse_factor_list(io.cfg.facts, cb->signature());
    const ForcedOutcome f = forced_outcome(*cb, s);
    if (io.json()) {
        io.emit(Json{{"state", names_json(s, cb->signature())},
                     {"verdict", std::string(to_string(f.verdict))},
                     {"forcing_plaintiff", f.forcing_plaintiff},
                     {"forcing_defendant", f.forcing_defendant}});
    } else {
        io.out << to_string(f.verdict) << '\n';
        auto list = [&](const char* label, const std::vector<std::string>& ids) {
            if (ids.empty()) return;
            io.out << label;
            for (std::size_t i = 0; i < ids.size(); ++i) io.out << (i ? ", " : "") << ids[i];
            io.out << '\n';
        };
        list("forced for plaintiff by: ", f.forcing_plaintiff);
        list("forced for defendant by: ", f.forcing_defendant);
    }
    return f.verdict == Forced::Conflict ? kExitNegative : kExitPositive;
}

int cmd_update(const Io& io) {
    auto cb = load_case_base(io);
    if (!cb) return kExitError;
    const Precedent c = precedent_from_json(parse_json(io.cfg.case_json), cb->signature());
    const ValidationReport r = validate_precedent(cb->signature(), c);
    print_violations(r, io.err);
    if (!r.ok()) return kExitError;
    const UpdateDecision d = check_update(*cb, c);
    if (cb->signature().size() <= kMaxModelAtoms && corollary2_decide(*cb, c) != d.accepted) {
        io.err << "internal error: update verdicts disagree\n";
        return kExitError;
    }
    if (!d.accepted) {
        if (!io.json()) io.out << "rejected\n";
        return report_witness(io, *cb, *d.witness, Json{{"accepted", false}});
    }
    if (io.json()) {
        io.emit(Json{{"accepted", true}});
    } else {
        io.out << "accepted\n";
    }
    return kExitPositive;
}

int cmd_translate(const Io& io) {
    auto cb = load_case_base(io);
    if (!cb) return kExitError;
    const Signature& sig = cb->signature();
    const bool result_mode = io.cfg.model_mode == "result";
    std::vector<std::string> conjuncts;
    for (const auto& c : cb->cases()) conjuncts.push_back(print_formula(result_mode ? tr1(c, sig) : tr2(c, sig), sig));

    std::optional<ConflictReport> conflict;
    if (!io.cfg.emit_model.empty()) {
        auto built = canonical_model(*cb);
        if (auto* m = std::get_if<ClassifierModel>(&built)) {
            write_atomically(io.cfg.emit_model, to_json(*m).dump(2) + "\n");
        } else {
            conflict = std::get<ConflictReport>(built);
        }
    }

    if (io.json()) {
        Json j{{"model", io.cfg.model_mode},
               {"conjuncts", conjuncts},
               {"formula", print_formula(result_mode ? tr1_cb(*cb) : tr2_cb(*cb), sig)}};
        if (conflict) j["conflict"] = to_json(*conflict, sig);
        io.emit(j);
    } else {
        if (conjuncts.empty()) io.out << print_formula(top(), sig) << '\n';
        for (const auto& c : conjuncts) io.out << c << '\n';
    }
    if (conflict) {
        io.err << "case base is inconsistent at " << set_to_string(conflict->state, sig) << " (cases '"
               << conflict->forcing_plaintiff.id << "' and '" << conflict->forcing_defendant.id
               << "'); no model written\n";
        return kExitNegative;
    }
    return kExitPositive;
}

// Terms that are explanations in every CM^prec model of tr2(cb).
ExplanationSet explain_all_models(const CaseBase& cb, ExplanationKind kind, AtomSet s, Outcome x,
                                  std::size_t bound) {
    const Signature& sig = cb.signature();
    std::vector<Term> candidates;
    if (kind == ExplanationKind::PImp) {
        for_each_subset(sig.all(), [&](AtomSet pos) {
            for_each_subset(sig.all() - pos, [&](AtomSet neg) { candidates.emplace_back(pos, neg); });
        });
    } else {
        for_each_subset(sig.all(), [&](AtomSet a) { candidates.push_back(Term::of_state(s, a)); });
    }
    std::vector<std::uint8_t> keep(candidates.size(), 1);
    const Formula theory = tr2_cb(cb);
    for_each_model(
        sig, ModelClass::CMPrec,
        [&](const ClassifierModel& m) {
            if (!holds_everywhere(m, theory)) return true;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                if (keep[i] && !explanation_holds(kind, m, s, candidates[i], x)) keep[i] = 0;
            }
            return true;
        },
        bound);
    ExplanationSet out{kind, x, kind == ExplanationKind::PImp ? std::nullopt : std::optional<AtomSet>(s), {}};
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (keep[i]) out.terms.push_back(candidates[i]);
    }
    std::sort(out.terms.begin(), out.terms.end(), term_less);
    return out;
}

int cmd_explain(const Io& io) {
    auto cb = load_case_base(io);
    if (!cb) return kExitError;
    const Signature& sig = cb->signature();
    const auto kind = explanation_kind_from_string(io.cfg.kind);
    if (!kind) throw UsageError("--kind must be one of pimp, axp, waxp, cxp, wcxp");
    const AtomSet s = parse_factor_list(io.cfg.facts, sig);
    std::optional<Outcome> requested;
    if (!io.cfg.outcome.empty()) requested = parse_outcome_flag(io.cfg.outcome);
    if (*kind == ExplanationKind::PImp && !requested) throw UsageError("pimp needs --outcome");

    if (auto w = conflict_witness(*cb)) {
        if (!io.json()) io.out << "inconsistent\n";
        return report_witness(io, *cb, *w, Json{{"consistent", false}});
    }
    const ClassifierModel model = std::get<ClassifierModel>(canonical_model(*cb));
    const Outcome x = requested.value_or(model.decision(s));

    ExplanationSet e;
    if (io.cfg.all_models) {
        e = explain_all_models(*cb, *kind, s, x, bound_or(io.cfg, kMaxEnumerationAtoms));
    } else {
        const std::size_t bound = bound_or(io.cfg, kMaxExplainAtoms);
        switch (*kind) {
            case ExplanationKind::PImp: e = enumerate_prime_implicants(model, x, bound); break;
            case ExplanationKind::AXp: e = enumerate_axp(model, s, bound); break;
            case ExplanationKind::WAXp: e = enumerate_waxp(model, s, bound); break;
            case ExplanationKind::CXp: e = enumerate_cxp(model, s, bound); break;
            case ExplanationKind::WCXp: e = enumerate_wcxp(model, s, bound); break;
        }
        // Every state-based explanation of x at s presupposes that s is decided x.
        if (e.target != x) {
            e.target = x;
            e.terms.clear();
        }
    }
    if (io.json()) {
        io.emit(to_json(e, sig));
    } else {
        io.out << render_text(e, sig);
    }
    return kExitPositive;
}

void print_formula_error(const Io& io, const ParseError& e) {
    io.err << "error: formula: " << e.message() << " at position " << e.position() << '\n';
    io.err << "  " << io.cfg.formula << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
}

int cmd_eval(const Io& io) {
    const ClassifierModel model = model_from_json(parse_json(read_file(io.cfg.input)));
    const Signature& sig = model.signature();
    const AtomSet s = parse_factor_list(io.cfg.state, sig);
    if (!model.contains(s)) throw UsageError("state " + set_to_string(s, sig) + " is not a state of the model");
    const bool value = satisfies(model, s, parse_formula(io.cfg.formula, sig));
    if (io.json()) {
        io.emit(Json{{"value", value}});
    } else {
        io.out << (value ? "true" : "false") << '\n';
    }
    return value ? kExitPositive : kExitNegative;
}

// Either a JSON signature object or "p1,p2;d1,d2".
Signature parse_signature_flag(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{') return signature_from_json(parse_json(text));
    const auto semi = text.find(';');
    auto names = [](std::string_view part) {
        std::vector<std::string> out;
        std::string token;
        for (char ch : part) {
            if (ch == ',' || ch == ' ' || ch == '\t') {
                if (!token.empty()) out.push_back(std::exchange(token, {}));
            } else {
                token += ch;
            }
        }
        if (!token.empty()) out.push_back(token);
        return out;
    };
    std::string_view view(text);
    try {
        return Signature(names(view.substr(0, semi)), semi == std::string::npos ? std::vector<std::string>{}
                                                                                : names(view.substr(semi + 1)));
    } catch (const UsageError& e) {
        throw FormatError(std::string("signature: ") + e.what());
    }
}

int cmd_sat(const Io& io) {
    const Signature sig = parse_signature_flag(io.cfg.signature);
    const Formula f = parse_formula(io.cfg.formula, sig);
    const SatResult r = is_satisfiable_tiny(f, sig, io.cfg.prec ? ModelClass::CMPrec : ModelClass::CM,
                                            bound_or(io.cfg, kMaxEnumerationAtoms));
    if (io.json()) {
        Json j{{"satisfiable", r.satisfiable}, {"class", io.cfg.prec ? "prec" : "all"}};
        if (r.witness) {
            j["witness"] = Json{{"model", to_json(r.witness->model)}, {"state", names_json(r.witness->state, sig)}};
        }
        io.emit(j);
    } else if (r.witness) {
        io.out << "satisfiable\nstate " << set_to_string(r.witness->state, sig) << '\n'
               << to_json(r.witness->model).dump(2) << '\n';
    } else {
        io.out << "unsatisfiable\n";
    }
    return r.satisfiable ? kExitPositive : kExitNegative;
}

int cmd_selftest(const Io& io) {
    SelftestOptions options;
    options.seed = io.cfg.seed;
    if (io.cfg.bound) options.max_atoms = std::clamp<std::size_t>(*io.cfg.bound, 2, kMaxExplainAtoms);
    const auto results = run_selftest(options);
    const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.ok(); });
    if (io.json()) {
        Json suites = Json::array();
        for (const auto& r : results) {
            Json j{{"name", r.name}, {"checked", r.checked}, {"failures", r.failures}};
            if (!r.ok()) j["first_failure"] = r.first_failure;
            suites.push_back(j);
        }
        io.emit(Json{{"seed", io.cfg.seed}, {"ok", ok}, {"suites", suites}});
    } else {
        for (const auto& r : results) {
            io.out << (r.ok() ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << r.name << std::right
                   << std::setw(8) << r.checked << " checked";
            if (!r.ok()) io.out << ", " << r.failures << " failed: " << r.first_failure;
            io.out << '\n';
        }
    }
    return ok ? kExitPositive : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string format = "text";
    std::size_t bound = 0;

    CLI::App app{"Precedential constraint and classifier-logic toolkit", "casebcl"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "Seed for randomized suites");
    auto* bound_opt = app.add_option("--bound", bound, "Override the atom bound of exhaustive procedures");

    auto* check = app.add_subcommand("check", "Decide consistency of a case base");
    check->add_option("casebase", cfg.input)->required();

    auto* decide = app.add_subcommand("decide", "Outcome forced on a fact situation");
    decide->add_option("casebase", cfg.input)->required();
    decide->add_option("--facts", cfg.facts, "Comma-separated factors");

    auto* update = app.add_subcommand("update", "Whether adding a case keeps the base consistent");
    update->add_option("casebase", cfg.input)->required();
    update->add_option("--case", cfg.case_json, "Case as inline JSON")->required();

    auto* translate = app.add_subcommand("translate", "Translate a case base into the classifier language");
    translate->add_option("casebase", cfg.input)->required();
    translate->add_option("--model", cfg.model_mode, "result or reason")->check(CLI::IsMember({"result", "reason"}));
    translate->add_option("--emit-model", cfg.emit_model, "Write the canonical model to this file");

    auto* explain = app.add_subcommand("explain", "Explanations of a decision");
    explain->add_option("casebase", cfg.input)->required();
    explain->add_option("--facts", cfg.facts, "Comma-separated factors");
    explain->add_option("--kind", cfg.kind, "pimp, axp, waxp, cxp or wcxp")->required();
    explain->add_option("--outcome", cfg.outcome, "1, 0 or ?");
    explain->add_flag("--all-models", cfg.all_models, "Quantify over every admissible model (tiny signatures)");

    auto* eval = app.add_subcommand("eval", "Evaluate a formula at a state of a model");
    eval->add_option("model", cfg.input)->required();
    eval->add_option("--state", cfg.state, "Comma-separated factors");
    eval->add_option("--formula", cfg.formula)->required();

    auto* sat = app.add_subcommand("sat", "Satisfiability by model enumeration");
    sat->add_option("--signature", cfg.signature, "JSON object or \"p1,p2;d1\"")->required();
    sat->add_option("--formula", cfg.formula)->required();
    sat->add_flag("--prec", cfg.prec, "Restrict to complete two-way monotone models");

    auto* selftest = app.add_subcommand("selftest", "Run the randomized agreement suites");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPositive : kExitError;
    }
    cfg.format = format == "json" ? Format::Json : Format::Text;
    if (bound_opt->count() > 0) cfg.bound = bound;

    const Io io{out, err, cfg};
    try {
        if (*check) return cmd_check(io);
        if (*decide) return cmd_decide(io);
        if (*update) return cmd_update(io);
        if (*translate) return cmd_translate(io);
        if (*explain) return cmd_explain(io);
        if (*eval) return cmd_eval(io);
        if (*sat) return cmd_sat(io);
        if (*selftest) return cmd_selftest(io);
    } catch (const ParseError& e) {
        print_formula_error(io, e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitError;
}

}  // namespace casebcl
