#pragma once

#include "juror/charges.hpp"
#include "juror/dispositions.hpp"
#include "juror/world_model.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace juror::io {

using Json = nlohmann::ordered_json;

// Charge file:
//   {"ground_size": N, "catalog": [labels]?, "atoms": {"0,3": "1/4", ...}}
// Atom keys are comma-separated ascending point indices, listed in canonical
// atom order. "catalog" marks a prior on the world space of that catalog,
// whose points are indexed 2 * transcript_mask + (guilt == I).
struct ChargeFile {
  Charge charge;
  std::optional<TestimonyCatalog> catalog;
};

Json charge_to_json(const Charge& charge, const std::optional<TestimonyCatalog>& catalog = std::nullopt);
// Throws ParseError on unknown keys, a non-partition, negative masses or a
// total other than one.
ChargeFile charge_from_json(const Json& json, std::size_t catalog_cap = TestimonyCatalog::kDefaultCap);

// Disposition file:
//   {"catalog": [labels], "convicting": [[labels], ...], "default": "acquit"}
Json disposition_to_json(const Disposition& f);
// Throws ParseError on malformed input and ForeignTestimony on labels outside
// the catalog.
Disposition disposition_from_json(const Json& json, std::size_t catalog_cap = TestimonyCatalog::kDefaultCap);

Json certificate_to_json(const RationalizationCertificate& cert, const Disposition& f);
std::string certificate_table(const RationalizationCertificate& cert, const Disposition& f);

// Parses text as JSON, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace juror::io
