#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apn/map.hpp"
#include "apn/spectra.hpp"
#include "apn/walsh.hpp"

namespace apn {

/// Outcome of one mechanical check. conclusion_holds is evaluated only when
/// the check applies and its hypotheses hold; a false conclusion signals an
/// implementation bug or a genuine counterexample and is surfaced loudly by
/// the verify command.
struct TheoremReport {
    std::string id;
    bool applicable = false;
    bool hypotheses_hold = false;
    std::optional<bool> conclusion_holds;
    std::string note;
    nlohmann::json witnesses = nlohmann::json::object();

    bool failed() const { return conclusion_holds && !*conclusion_holds; }
};

enum class WalshMode { Full, ZeroOnly, Skip };

/// Every profile of a map, computed once and shared by the checkers.
/// Profile consistency (spectra identities) is asserted on construction.
struct MapAnalysis {
    MapTable f;
    PreimageProfile pp;
    DifferentialProfile dp;
    PolyRepr pr;
    std::optional<WalshProfile> wp;
};

MapAnalysis analyze_map(MapTable f, WalshMode mode = WalshMode::Full,
                        unsigned walsh_full_cap = kWalshFullCap,
                        unsigned walsh_zero_cap = kWalshZeroCap);

// Checkers. Stable ids in parentheses.
TheoremReport check_lower_bound(const MapAnalysis& an);            // lb.duniform
TheoremReport check_mr_inequalities(const MapAnalysis& an);        // ineq.mr
TheoremReport check_apn_lower_bound_cases(const MapAnalysis& an);  // lb.apn-cases
TheoremReport check_sufficient_3to1(const MapAnalysis& an);        // apn.sufficient-3to1
TheoremReport check_do_equivalence(const MapAnalysis& an);         // do.equiv
TheoremReport check_subfield_permutation(const MapAnalysis& an);   // subfield.perm
TheoremReport check_ab_properties(const MapAnalysis& an);          // ab.lemma-stats
TheoremReport check_k_to_1_spectrum(const MapAnalysis& an);        // walsh.k-to-1

/// Applicable upper bounds, each its own report: ub.coulter-senger, ub.ab,
/// ub.bent-count, ub.plateaued-apn, ub.wan. Inapplicable bounds are
/// reported with the reason, never silently dropped.
std::vector<TheoremReport> check_upper_bounds(const MapAnalysis& an);

/// All checkers in a fixed order.
std::vector<TheoremReport> run_all(const MapAnalysis& an);

nlohmann::json to_json(const TheoremReport& r);

}  // namespace apn
