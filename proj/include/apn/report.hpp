#pragma once

#include <json.hpp>

#include "apn/theorems.hpp"

namespace apn {

inline constexpr int kSchemaVersion = 1;

/// Where a map came from: a family id with parameters, an expression, or a
/// LUT file. Reports always carry the table digest so results can be
/// replayed bit-exactly.
struct Provenance {
    std::string kind;  // "family" | "expr" | "lut"
    nlohmann::json detail = nlohmann::json::object();
};

nlohmann::json profile_json(const PreimageProfile& pp);
nlohmann::json profile_json(const DifferentialProfile& dp);
nlohmann::json profile_json(const WalshProfile& wp);

/// Self-contained analysis report. Identical inputs produce byte-identical
/// JSON except for the "timing_ms" block.
nlohmann::json analysis_report(const MapAnalysis& an, const Provenance& prov,
                               const std::vector<TheoremReport>& reports,
                               double elapsed_ms);

}  // namespace apn
