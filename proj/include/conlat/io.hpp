#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "conlat/concept.hpp"
#include "conlat/lattice_verify.hpp"
#include "conlat/prob_meet.hpp"

namespace conlat {

/// Insertion-ordered so that output key order is fixed by the writer.
using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws IoError or ParseError.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);

/// Compact single-line rendering. Reals are rounded to 12 significant
/// digits before they are stored, so the text is stable.
std::string dump(const Json& j);

// Parsers throw ParseError on structural problems. Values are then checked
// by the library constructors (DomainMismatch, CapExceeded, ...).
SchemaPtr parse_schema(const Json& j);
Property parse_property(const Json& j);
Concept parse_concept(const SchemaPtr& schema, const Json& j);
Instance parse_instance(const SchemaPtr& schema, const Json& j);
/// {"instances":[[...], ...]}; entries may also be {"point":[...]} objects.
std::vector<Instance> parse_pool(const SchemaPtr& schema, const Json& j);
Posterior parse_posterior(const Json& j);

Json to_json(const FeatureSchema& schema);
Json to_json(const Property& p);
Json to_json(const Concept& c);
Json to_json(const Instance& x);
Json to_json(const Posterior& p);
Json to_json(const PMeetResult& result);
Json to_json(const FiniteSpace& space, const CheckReport& report);

}  // namespace conlat
