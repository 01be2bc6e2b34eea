#include "apn/report.hpp"

namespace apn {

nlohmann::json profile_json(const PreimageProfile& pp) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [r, c] : pp.M) m[std::to_string(r)] = c;
    nlohmann::json j;
    j["image_size"] = pp.image_size;
    j["N"] = pp.N;
    j["M"] = m;
    j["omega0"] = pp.omega.empty() ? 0 : pp.omega[0];
    j["permutation"] = pp.is_permutation();
    const auto k = almost_k_to_1_value(pp);
    j["almost_k_to_1"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json profile_json(const DifferentialProfile& dp) {
    nlohmann::json j;
    j["d"] = dp.d;
    j["t0"] = dp.t0;
    j["apn"] = dp.d == 2;
    return j;
}

nlohmann::json profile_json(const WalshProfile& wp) {
    nlohmann::json j;
    j["mode"] = wp.full ? "full" : "zero-only";
    j["balanced_count"] = wp.balanced_count;
    if (wp.full) {
        j["bent_count"] = wp.bent_count;
        j["component_wise_plateaued"] = wp.component_wise_plateaued;
        if (wp.n % 2 == 1) j["almost_bent"] = wp.almost_bent;
        else j["classical_spectrum"] = wp.classical;
        nlohmann::json spec = nlohmann::json::object();
        for (const auto& [v, c] : wp.abs_spectrum) spec[std::to_string(v)] = c;
        j["abs_spectrum"] = spec;
    }
    if (wp.n % 2 == 1) {
        j["N0"] = wp.N0;
        j["Nplus"] = wp.Nplus;
        j["Nminus"] = wp.Nminus;
    }
    return j;
}

nlohmann::json analysis_report(const MapAnalysis& an, const Provenance& prov,
                               const std::vector<TheoremReport>& reports,
                               double elapsed_ms) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["field"] = an.f.field->record();
    nlohmann::json p;
    p["kind"] = prov.kind;
    p["detail"] = prov.detail;
    p["lut_digest"] = lut_digest(an.f);
    j["provenance"] = p;
    j["preimage"] = profile_json(an.pp);
    j["differential"] = profile_json(an.dp);
    j["degree"] = degree(an.pr);
    j["dembowski_ostrom"] = is_dembowski_ostrom(an.pr);
    j["quadratic"] = is_quadratic(an.pr);
    if (an.wp) j["walsh"] = profile_json(*an.wp);
    else j["walsh"] = nullptr;
    nlohmann::json th = nlohmann::json::array();
    for (const auto& r : reports) th.push_back(to_json(r));
    j["theorems"] = th;
    j["timing_ms"] = {{"total", elapsed_ms}};
    return j;
}

}  // namespace apn
