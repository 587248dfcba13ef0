#pragma once

// JSON encodings of elements, vectors, signatures, GP functions and matroids.
// Parse errors are InputErrors naming the offending field path.

#include <string>
#include <vector>

#include <json.hpp>

#include "hfm/circuits.hpp"
#include "hfm/gp.hpp"
#include "hfm/transforms.hpp"

namespace hfm {

using Json = nlohmann::ordered_json;

// Parses text; syntax errors become InputErrors with the byte offset.
Json parse_json_text(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);  // "-" reads stdin

// Krasner 0|1, Sign -1|0|1, Tropical and Triangle decimal strings (tropical
// values without a terminating decimal expansion are written "p/q"), Phase
// {"angle": radians} or 0, Rational "p/q", finite fields integers.
Json element_to_json(const Element& x);
Element element_from_json(const Hyperfield& field, const Json& j, const std::string& path);

Json ground_set_to_json(const GroundSet& g);
GroundSet ground_set_from_json(const Json& j, const std::string& path);
Json subset_to_json(const GroundSet& g, Subset s);
Subset subset_from_json(const GroundSet& g, const Json& j, const std::string& path);

Json fvector_to_json(const FVector& x, const GroundSet& g);
FVector fvector_from_json(const Json& j, const Hyperfield& field, const GroundSet& g, const std::string& path);

Json signature_to_json(const Signature& sig);
// Duplicate projective classes are collapsed; a message is appended to `warnings`.
Signature signature_from_json(const Json& j, std::vector<std::string>* warnings = nullptr);

Json gp_to_json(const GPFunction& phi);
GPFunction gp_from_json(const Json& j);

Json matroid_to_json(const Matroid& m, const GroundSet& g);
Matroid matroid_from_json(const Json& j, GroundSet* ground = nullptr);

Json witness_to_json(const Witness& w, const GroundSet& g);
Json gp_witness_to_json(const GPWitness& w, const GroundSet& g);
Json classification_to_json(const Classification& c, const GroundSet& g);
Json axiom_report_to_json(const AxiomReport& r);

}  // namespace hfm
