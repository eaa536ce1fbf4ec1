// Complexity and volume estimates for M_n(p,q) as evaluable formulas.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bridgecover/arith.hpp"

namespace bridgecover {

struct Constants {
    static constexpr double v3 = 1.0149416064096536;  // regular ideal tetrahedron
    static constexpr double v8 = 3.663862376708876;   // regular ideal octahedron
    // Printed four-digit offsets; their closed forms are not available.
    static constexpr double gf_offset = 2.7066;
    static constexpr double ell_offset = 2.6667;
    static constexpr double borromean_vol = 7.32772;
};

struct LowerEstimate {
    double value = 0;
    double c = 0;         // 2*sqrt(2) or 4
    int valid_from = 0;   // smallest n for which the estimate is proven
    bool valid = false;
    bool in_domain = true;  // false when 1 - c*pi^2/n^2 <= 0 and value is clamped to 0
};

struct LowerBound {
    int ell = 0;
    double coefficient = 0;  // max{2, 2*ell - ell_offset}
    std::vector<LowerEstimate> candidates;  // c = 2*sqrt(2) first, then c = 4

    /// Largest valid candidate, if any.
    std::optional<LowerEstimate> best() const;
};

/// (1 - c*pi^2/n^2)^{3/2}, or nullopt outside the real domain.
std::optional<double> cover_factor(double c, int n);

Integer upper_bound(const SlopePair& s, int n);

/// Present when p/q is equivalent to k + 1/m with k, m >= 2 not both odd.
std::optional<Integer> improved_upper(const SlopePair& s, int n);

/// n(min{k,m} + k + m - 3).
Integer improved_upper_formula(const Integer& k, const Integer& m, int n);

/// Whether the class of s is K(5,2) or K(7,3).
bool excluded_pair(const SlopePair& s);

/// Absent for torus slopes.
std::optional<LowerBound> lower_bound(const SlopePair& s, int n);

/// Throw std::invalid_argument on torus slopes.
double vol_lower(const SlopePair& s);
double vol_upper(const SlopePair& s);

/// n(1 - c*pi^2/n^2)^{3/2} vol / v3 for both constants; throws on vol <= 0 or n < 2.
std::vector<LowerEstimate> volume_based_lower(double vol, int n, bool excluded);

struct BoundsReport {
    SlopePair slope{2, 1};
    int n = 2;
    Integer upper;
    std::optional<Integer> improved_upper;
    std::optional<LowerBound> lower;
    std::string lower_reason;  // set when lower is absent
    std::optional<double> vol_lower;
    std::optional<double> vol_upper;
    std::optional<double> vol_input;
    std::vector<LowerEstimate> vol_based_cover_lower;
    bool is_hyperbolic = false;
    bool excluded_pair = false;
};

BoundsReport bounds_report(const SlopePair& s, int n, std::optional<double> vol = std::nullopt);

/// Decimal string with six significant digits.
std::string format6(double x);

}  // namespace bridgecover
