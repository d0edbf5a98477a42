#pragma once

#include "fusionlab/modular.hpp"

#include <json.hpp>

#include <optional>

namespace fusionlab {

using Json = nlohmann::ordered_json;

/// One ring file: the fusion data plus the optional payloads that ride along
/// (S-matrix, hypothesis flags, golden expectations). The S-matrix cells are
/// kept both parsed and as canonical text so serialization is reproducible.
struct RingDocument {
    std::string name;
    FusionRing ring;
    std::optional<ModularData> modular;
    std::vector<std::vector<std::string>> smatrix_text;
    HypothesisFlags flags;
    Json expected; // opaque golden block, kept verbatim (null when absent)
};

/// Sets a hypothesis flag by its reported name ("spherical",
/// "pseudo-unitary", "braided", "ribbon", "unitary", "modular").
/// Returns false for an unknown name.
bool set_hypothesis_flag(HypothesisFlags& flags, const std::string& name);

/// Parses and fully validates a ring document. Schema violations throw
/// Error prefixed with the JSON-pointer path of the offending node; ring
/// axiom failures throw Error listing every violated axiom with its witness
/// indices; S-matrix problems surface from the modular validator.
RingDocument parse_ring_document(const Json& j);

/// Reads a UTF-8 JSON file and parses it as a ring document.
RingDocument load_ring_document(const std::string& path);

/// Canonical serialization: stable field order with scalar cells re-rendered
/// through the expression grammar, so load followed by re-serialization is
/// idempotent.
Json ring_document_json(const RingDocument& doc);

} // namespace fusionlab
