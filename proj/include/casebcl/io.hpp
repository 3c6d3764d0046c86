#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "casebcl/bridge.hpp"
#include "casebcl/casebase.hpp"
#include "casebcl/explain.hpp"
#include "casebcl/model.hpp"

namespace casebcl {

using Json = nlohmann::ordered_json;

// Reads a whole file; FormatError when it cannot be opened.
std::string read_file(const std::string& path);
// Parses JSON text; FormatError with the parser's diagnostic on failure.
Json parse_json(std::string_view text);

// {"plaintiff": [...], "defendant": [...]}
Signature signature_from_json(const Json& j);
Json to_json(const Signature& sig);

// Case-base documents:
//   {"signature": {...},
//    "cases": [{"id", "facts": [...], "reason": [...], "outcome": "plaintiff"|"defendant"}]}
// Unknown factor names and schema mismatches raise FormatError. Semantic
// checks (reason within facts, polarity) are left to validate_case_base.
CaseBase case_base_from_json(const Json& j);
Precedent precedent_from_json(const Json& j, const Signature& sig);
Json to_json(const CaseBase& cb);
Json to_json(const Precedent& c, const Signature& sig);

// Model documents: {"signature": {...}, "states": [[...]], "decisions": ["1"|"0"|"?"]}.
// Without "states" the decisions cover every valuation in bit-pattern order.
ClassifierModel model_from_json(const Json& j);
Json to_json(const ClassifierModel& model);

// Factor names of a set, canonical order.
Json names_json(AtomSet s, const Signature& sig);
// A list of factor names as a set; FormatError on unknown names.
AtomSet atom_set_from_json(const Json& j, const Signature& sig, std::string_view what);
// Comma- or whitespace-separated factor names; FormatError on unknown names.
AtomSet parse_factor_list(std::string_view text, const Signature& sig);
// "{pi1, delta2}"
std::string set_to_string(AtomSet s, const Signature& sig);

Json to_json(const Term& t, const Signature& sig);
Json to_json(const ExplanationSet& e, const Signature& sig);
Json to_json(const ConflictWitness& w, const Signature& sig);
Json to_json(const ConflictReport& r, const Signature& sig);

std::string render_text(const ExplanationSet& e, const Signature& sig);
std::string render_text(const ConflictWitness& w, const Signature& sig);

}  // namespace casebcl
