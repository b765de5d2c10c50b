// JSON document format: the wire format for every object kind and for
// verification reports. Serialization is canonical (fixed key order, canonical
// rational strings) so identical objects produce byte-identical text.
#pragma once

#include "mgc/filtered.hpp"
#include "mgc/mixed.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace mgc {

using Json = nlohmann::ordered_json;

struct Document {
    std::string kind; // "chain" | "graded" | "mixed" | "filtered" | "report"
    SignConvention convention = SignConvention::Anticommuting;

    ChainComplex chain;
    GradedComplex graded;
    MixedComplex mixed;
    FilteredComplex filtered;
    Json report; // raw payload for report documents
};

// Building blocks (payloads only).
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json chain_to_json(const ChainComplex& c);
ChainComplex chain_from_json(const Json& j);
Json graded_to_json(const GradedComplex& g);
GradedComplex graded_from_json(const Json& j);
Json mixed_to_json(const MixedComplex& m);
MixedComplex mixed_from_json(const Json& j);
Json filtered_to_json(const FilteredComplex& f);
FilteredComplex filtered_from_json(const Json& j);

Document make_document(const ChainComplex& c);
Document make_document(const GradedComplex& g);
Document make_document(const MixedComplex& m);
Document make_document(const FilteredComplex& f);
Document make_report_document(const Json& payload);

// Throws ParseError on malformed input and InvariantViolation when the payload
// fails its structural laws. Mixed documents tagged "commuting" are converted
// to the internal anticommuting convention on ingest.
Document parse_document(const std::string& text);
std::string serialize(const Document& doc);

} // namespace mgc
