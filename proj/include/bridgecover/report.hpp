// Full pipeline for one covering and batch sweeps over parameter grids.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bridgecover/bounds.hpp"
#include "bridgecover/diagram.hpp"
#include "bridgecover/fundgroup.hpp"
#include "bridgecover/minkus.hpp"
#include "bridgecover/verify.hpp"

namespace bridgecover {

using Json = nlohmann::ordered_json;

struct CaseParameters {
    int p = 2, q = 1, n = 2, m = 1;

    bool operator==(const CaseParameters&) const = default;
};

struct CaseReport {
    CaseParameters params;
    LinkClass link{SlopePair(2, 1), {}, false, false, false, 0, std::nullopt};
    ContinuedFraction expansion{{Integer(2)}};
    TwistAnalysis twists{ContinuedFraction({Integer(2)}), false, 0, false, {}};
    int winding = 1;
    int scheme_regions = 0;
    int region_edges = 0;
    ValidationReport validation;
    std::vector<HomologyResult> homology;  // H_0..H_3 of the triangulation
    HomologyResult cw_h1;                  // H_1 of the Minkus quotient complex
    std::array<int, 4> cw_cells{};
    GroupPresentation presentation;
    int deduplicated_relators = 0;
    HomologyResult abelianization;
    BoundsReport bounds;
    std::vector<std::string> failures;  // violated internal consistency checks

    bool consistent() const { return failures.empty(); }
};

/// Runs every module on one admissible case. Invalid parameters throw
/// std::invalid_argument; internal defects are recorded in `failures`.
CaseReport analyze_case(const CaseParameters& params, std::optional<double> vol = std::nullopt);

/// Every admissible (p, q, n, m) with p <= p_max and n <= n_max, in
/// ascending lexicographic order.
std::vector<CaseParameters> sweep_cases(int p_max, int n_max);

std::vector<CaseReport> sweep_serial(const std::vector<CaseParameters>& cases);
/// OpenMP over cases; results land at their case index, so order matches serial.
std::vector<CaseReport> sweep_parallel(const std::vector<CaseParameters>& cases);

// Machine-size values as numbers, anything larger as a decimal string.
Json integer_json(const Integer& x);

Json to_json(const LinkClass& c);
Json to_json(const HomologyResult& h);
Json to_json(const ValidationReport& r);
Json to_json(const BoundsReport& r);
Json to_json(const CaseReport& r);

}  // namespace bridgecover
