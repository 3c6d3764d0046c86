#include "casebcl/io.hpp"

#include <fstream>
#include <sstream>

#include "casebcl/errors.hpp"

namespace casebcl {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

namespace {

const Json& field(const Json& j, const char* key, std::string_view where) {
    if (!j.is_object()) throw FormatError(std::string(where) + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(std::string(where) + ": missing field '" + key + "'");
    return *it;
}

std::vector<std::string> string_list(const Json& j, std::string_view what) {
    if (!j.is_array()) throw FormatError(std::string(what) + ": expected a list of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw FormatError(std::string(what) + ": expected a list of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

Outcome case_outcome(const Json& j, std::string_view where) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "plaintiff") return Outcome::Plaintiff;
        if (s == "defendant") return Outcome::Defendant;
    }
    throw FormatError(std::string(where) + ": outcome must be \"plaintiff\" or \"defendant\"");
}

}  // namespace

Signature signature_from_json(const Json& j) {
    auto p = string_list(field(j, "plaintiff", "signature"), "signature.plaintiff");
    auto d = string_list(field(j, "defendant", "signature"), "signature.defendant");
    try {
        return Signature(std::move(p), std::move(d));
    } catch (const UsageError& e) {
        throw FormatError(std::string("signature: ") + e.what());
    }
}

Json to_json(const Signature& sig) {
    return Json{{"plaintiff", names_json(sig.plaintiff(), sig)}, {"defendant", names_json(sig.defendant(), sig)}};
}

AtomSet atom_set_from_json(const Json& j, const Signature& sig, std::string_view what) {
    AtomSet out;
    for (const auto& name : string_list(j, what)) {
        auto a = sig.find(name);
        if (!a) throw FormatError(std::string(what) + ": unknown factor '" + name + "'");
        out = out.with(*a);
    }
    return out;
}

Precedent precedent_from_json(const Json& j, const Signature& sig) {
    const Json& id = field(j, "id", "case");
    if (!id.is_string()) throw FormatError("case: id must be a string");
    Precedent c;
    c.id = id.get<std::string>();
    const std::string where = "case '" + c.id + "'";
    c.facts = atom_set_from_json(field(j, "facts", where), sig, where + " facts");
    c.reason = atom_set_from_json(field(j, "reason", where), sig, where + " reason");
    c.outcome = case_outcome(field(j, "outcome", where), where);
    return c;
}

CaseBase case_base_from_json(const Json& j) {
    Signature sig = signature_from_json(field(j, "signature", "case base"));
    const Json& cases = field(j, "cases", "case base");
    if (!cases.is_array()) throw FormatError("case base: cases must be a list");
    std::vector<Precedent> out;
    for (const auto& c : cases) out.push_back(precedent_from_json(c, sig));
    return CaseBase(std::move(sig), std::move(out));
}

Json to_json(const Precedent& c, const Signature& sig) {
    return Json{{"id", c.id},
                {"facts", names_json(c.facts, sig)},
                {"reason", names_json(c.reason, sig)},
                {"outcome", c.outcome == Outcome::Plaintiff ? "plaintiff" : "defendant"}};
}

Json to_json(const CaseBase& cb) {
    Json cases = Json::array();
    for (const auto& c : cb.cases()) cases.push_back(to_json(c, cb.signature()));
    return Json{{"signature", to_json(cb.signature())}, {"cases", cases}};
}

ClassifierModel model_from_json(const Json& j) {
    Signature sig = signature_from_json(field(j, "signature", "model"));
    std::vector<Outcome> decisions;
    for (const auto& d : string_list(field(j, "decisions", "model"), "model.decisions")) {
        auto x = outcome_from_string(d);
        if (!x) throw FormatError("model.decisions: '" + d + "' is not one of 1, 0, ?");
        decisions.push_back(*x);
    }
    try {
        if (!j.contains("states")) {
            if (sig.size() > kMaxModelAtoms) throw CapacityError("model over too many atoms", kMaxModelAtoms);
            if (decisions.size() != (std::size_t{1} << sig.size())) {
                throw FormatError("model.decisions: expected one decision per valuation (" +
                                  std::to_string(std::size_t{1} << sig.size()) + ")");
            }
            return ClassifierModel::complete(std::move(sig), decisions);
        }
        const Json& states = j.at("states");
        if (!states.is_array()) throw FormatError("model.states: expected a list");
        if (states.size() != decisions.size()) {
            throw FormatError("model: states and decisions differ in length");
        }
        std::vector<std::pair<AtomSet, Outcome>> table;
        for (std::size_t i = 0; i < states.size(); ++i) {
            table.emplace_back(atom_set_from_json(states[i], sig, "model.states"), decisions[i]);
        }
        return ClassifierModel(std::move(sig), table);
    } catch (const UsageError& e) {
        throw FormatError(std::string("model: ") + e.what());
    }
}

Json to_json(const ClassifierModel& model) {
    const Signature& sig = model.signature();
    Json states = Json::array();
    Json decisions = Json::array();
    for (AtomSet s : model.states()) {
        states.push_back(names_json(s, sig));
        decisions.push_back(std::string(to_string(model.decision(s))));
    }
    return Json{{"signature", to_json(sig)}, {"states", states}, {"decisions", decisions}};
}

Json names_json(AtomSet s, const Signature& sig) {
    Json out = Json::array();
    for (const auto& n : sig.names_of(s)) out.push_back(n);
    return out;
}

AtomSet parse_factor_list(std::string_view text, const Signature& sig) {
    AtomSet out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        auto a = sig.find(token);
        if (!a) throw FormatError("unknown factor '" + token + "'");
        out = out.with(*a);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n') {
            flush();
        } else {
            token += ch;
        }
    }
    flush();
    return out;
}

std::string set_to_string(AtomSet s, const Signature& sig) {
    std::string out = "{";
    for (const auto& n : sig.names_of(s)) out += (out.size() > 1 ? ", " : "") + n;
    return out + "}";
}

Json to_json(const Term& t, const Signature& sig) {
    return Json{{"positive", names_json(t.positive(), sig)}, {"negative", names_json(t.negative(), sig)}};
}

Json to_json(const ExplanationSet& e, const Signature& sig) {
    Json terms = Json::array();
    for (const auto& t : e.terms) terms.push_back(to_json(t, sig));
    return Json{{"kind", std::string(to_string(e.kind))},
                {"target", std::string(to_string(e.target))},
                {"state", e.state ? names_json(*e.state, sig) : Json(nullptr)},
                {"terms", terms}};
}

Json to_json(const ConflictWitness& w, const Signature& sig) {
    return Json{{"plaintiff_case", w.plaintiff_case.id},
                {"defendant_case", w.defendant_case.id},
                {"plaintiff_reason", names_json(w.plaintiff_reason.factors, sig)},
                {"defendant_reason", names_json(w.defendant_reason.factors, sig)},
                {"state", names_json(w.state, sig)}};
}

Json to_json(const ConflictReport& r, const Signature& sig) {
    return Json{{"plaintiff_case", r.forcing_plaintiff.id},
                {"defendant_case", r.forcing_defendant.id},
                {"state", names_json(r.state, sig)}};
}

std::string render_text(const ExplanationSet& e, const Signature& sig) {
    std::ostringstream out;
    out << "kind    " << to_string(e.kind) << '\n';
    out << "target  " << to_string(e.target) << '\n';
    if (e.state) out << "state   " << set_to_string(*e.state, sig) << '\n';
    if (e.terms.empty()) {
        out << "terms   (none)\n";
    } else {
        for (std::size_t i = 0; i < e.terms.size(); ++i) {
            out << (i == 0 ? "terms   " : "        ") << to_string(e.terms[i], sig) << '\n';
        }
    }
    return out.str();
}

std::string render_text(const ConflictWitness& w, const Signature& sig) {
    std::ostringstream out;
    out << "conflict between '" << w.plaintiff_case.id << "' (reason " << set_to_string(w.plaintiff_reason.factors, sig)
        << ") and '" << w.defendant_case.id << "' (reason " << set_to_string(w.defendant_reason.factors, sig)
        << ")\nwitness state " << set_to_string(w.state, sig) << '\n';
    return out.str();
}

}  // namespace casebcl
