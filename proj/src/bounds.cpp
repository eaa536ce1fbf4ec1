#include "bridgecover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace bridgecover {

namespace {

const double kSqrt8 = 2.0 * std::numbers::sqrt2;

double ell_coefficient(int ell) { return std::max(2.0, 2.0 * ell - Constants::ell_offset); }

std::vector<LowerEstimate> estimates(double scale, int n, bool excluded) {
    std::vector<LowerEstimate> out;
    for (auto [c, from, allowed] : {std::tuple{kSqrt8, 6, !excluded}, std::tuple{4.0, 7, true}}) {
        LowerEstimate e;
        e.c = c;
        e.valid_from = from;
        const auto factor = cover_factor(c, n);
        e.in_domain = factor.has_value();
        e.value = factor ? n * *factor * scale : 0.0;
        e.valid = allowed && n >= from && e.in_domain;
        out.push_back(e);
    }
    return out;
}

void require_hyperbolic(const SlopePair& s) {
    if (classify(s).is_torus) throw std::invalid_argument("K" + s.str() + " is a torus link; no volume estimate");
}

}  // namespace

std::optional<LowerEstimate> LowerBound::best() const {
    std::optional<LowerEstimate> b;
    for (const auto& e : candidates)
        if (e.valid && (!b || e.value > b->value)) b = e;
    return b;
}

std::optional<double> cover_factor(double c, int n) {
    const double base = 1.0 - c * std::numbers::pi * std::numbers::pi / (static_cast<double>(n) * n);
    if (base <= 0) return std::nullopt;
    return std::pow(base, 1.5);
}

Integer upper_bound(const SlopePair& s, int n) {
    if (n < 2) throw std::invalid_argument("covering order n must be at least 2");
    return Integer(n) * (s.p() - 1);
}

Integer improved_upper_formula(const Integer& k, const Integer& m, int n) {
    return Integer(n) * (std::min(k, m) + k + m - 3);
}

std::optional<Integer> improved_upper(const SlopePair& s, int n) {
    if (n < 2) throw std::invalid_argument("covering order n must be at least 2");
    const auto km = classify(s).km_form;
    if (!km) return std::nullopt;
    const bool both_odd = mpz_odd_p(km->k.get_mpz_t()) && mpz_odd_p(km->m.get_mpz_t());
    if (both_odd) return std::nullopt;
    return improved_upper_formula(km->k, km->m, n);
}

bool excluded_pair(const SlopePair& s) {
    const auto canonical = classify(s).canonical;
    return canonical == SlopePair(5, 2) || canonical == SlopePair(7, 2);
}

std::optional<LowerBound> lower_bound(const SlopePair& s, int n) {
    if (n < 2) throw std::invalid_argument("covering order n must be at least 2");
    const auto cls = classify(s);
    if (cls.is_torus) return std::nullopt;
    LowerBound lb;
    lb.ell = cls.ell;
    lb.coefficient = ell_coefficient(cls.ell);
    lb.candidates = estimates(lb.coefficient, n, excluded_pair(s));
    return lb;
}

double vol_lower(const SlopePair& s) {
    require_hyperbolic(s);
    return Constants::v3 * ell_coefficient(ell(s));
}

double vol_upper(const SlopePair& s) {
    require_hyperbolic(s);
    return 2.0 * Constants::v8 * (ell(s) - 1);
}

std::vector<LowerEstimate> volume_based_lower(double vol, int n, bool excluded) {
    if (!(vol > 0)) throw std::invalid_argument("volume must be positive");
    if (n < 2) throw std::invalid_argument("covering order n must be at least 2");
    return estimates(vol / Constants::v3, n, excluded);
}

BoundsReport bounds_report(const SlopePair& s, int n, std::optional<double> vol) {
    BoundsReport r;
    r.slope = s;
    r.n = n;
    r.upper = upper_bound(s, n);
    r.improved_upper = improved_upper(s, n);
    r.is_hyperbolic = classify(s).is_hyperbolic;
    r.excluded_pair = excluded_pair(s);
    r.lower = lower_bound(s, n);
    if (!r.lower) r.lower_reason = "torus link";
    if (r.is_hyperbolic) {
        r.vol_lower = vol_lower(s);
        r.vol_upper = vol_upper(s);
    }
    if (vol) {
        r.vol_input = vol;
        r.vol_based_cover_lower = volume_based_lower(*vol, n, r.excluded_pair);
    }
    return r;
}

std::string format6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace bridgecover
