#include "bridgecover/arith.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace bridgecover {

std::string to_string(const Integer& value) { return value.get_str(); }

int to_int(const Integer& value) {
    if (!value.fits_sint_p()) {
        throw std::out_of_range("integer " + value.get_str() + " does not fit in int");
    }
    return static_cast<int>(value.get_si());
}

std::string slope_error(const Integer& p, const Integer& q) {
    if (p < 2) return "p must be at least 2";
    if (q <= 0 || q >= p) return "q must satisfy 0 < q < p";
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) return "gcd(p, q) = " + g.get_str() + " != 1";
    return {};
}

SlopePair::SlopePair(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
    if (auto err = slope_error(p_, q_); !err.empty()) {
        throw std::invalid_argument("invalid slope (" + p_.get_str() + ", " + q_.get_str() + "): " + err);
    }
}

std::string SlopePair::str() const { return "(" + p_.get_str() + "," + q_.get_str() + ")"; }

ContinuedFraction::ContinuedFraction(std::vector<Integer> coefficients, bool minimize)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("continued fraction needs at least one coefficient");
    for (const auto& a : coefficients_) {
        if (a <= 0) throw std::invalid_argument("continued fraction coefficients must be positive");
    }
    if (minimize && coefficients_.size() > 1 && coefficients_.back() == 1) {
        coefficients_.pop_back();
        coefficients_.back() += 1;
    }
    minimized_ = coefficients_.back() > 1;
}

std::string ContinuedFraction::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (i) os << ',';
        os << coefficients_[i].get_str();
    }
    os << ']';
    return os.str();
}

ContinuedFraction minimized_expansion(const SlopePair& s) {
    std::vector<Integer> a;
    Integer num = s.p(), den = s.q();
    while (den != 0) {
        Integer quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        a.push_back(quot);
        num = den;
        den = rem;
    }
    // Euclid never leaves a trailing 1 for q < p, so this is already minimized.
    return ContinuedFraction(std::move(a));
}

std::pair<Integer, Integer> evaluate_fraction(const std::vector<Integer>& coefficients) {
    // Convergent recurrence h_i = a_i h_{i-1} + h_{i-2}; consecutive convergents are coprime.
    Integer h_prev = 1, h = coefficients.front();
    Integer k_prev = 0, k = 1;
    for (std::size_t i = 1; i < coefficients.size(); ++i) {
        Integer h_next = coefficients[i] * h + h_prev;
        Integer k_next = coefficients[i] * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return {h, k};
}

SlopePair evaluate_cf(const ContinuedFraction& cf) {
    auto [num, den] = evaluate_fraction(cf.coefficients());
    return SlopePair(num, den);
}

int ell(const SlopePair& s) {
    const auto cf = minimized_expansion(s);
    const int k = static_cast<int>(cf.length());
    return cf.coefficients().front() > 1 ? k : k - 1;
}

std::set<Integer> equivalence_orbit(const SlopePair& s) {
    const Integer& p = s.p();
    const Integer& q = s.q();
    Integer r;
    mpz_invert(r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Integer p_minus_r = p - r;
    // p = 2, q = 1: r = 1 and p - r = 1; the set removes duplicates.
    return {q, p - q, r, p_minus_r};
}

bool equivalent(const SlopePair& a, const SlopePair& b) {
    if (a.p() != b.p()) return false;
    return equivalence_orbit(a).count(b.q()) > 0;
}

namespace {

std::optional<KmForm> detect_km_form(const Integer& p, const std::set<Integer>& orbit) {
    // Largest qualifying representative: p = km + 1 puts both m and k in the
    // orbit, so this choice gives k <= m and is independent of the input q.
    for (auto it = orbit.rbegin(); it != orbit.rend(); ++it) {
        const Integer& m = *it;
        if (m < 2) continue;
        Integer pm1 = p - 1;
        if (mpz_divisible_p(pm1.get_mpz_t(), m.get_mpz_t()) == 0) continue;
        Integer k = pm1 / m;
        if (k >= 2) return KmForm{k, m};
    }
    return std::nullopt;
}

}  // namespace

LinkClass classify(const SlopePair& s) {
    auto orbit = equivalence_orbit(s);
    SlopePair canonical(s.p(), *orbit.begin());
    const bool torus = orbit.count(Integer(1)) > 0;
    LinkClass c{canonical, orbit, false, false, false, 0, std::nullopt};
    c.is_knot = mpz_odd_p(s.p().get_mpz_t()) != 0;
    c.is_torus = torus;
    c.is_hyperbolic = !torus;
    c.ell = ell(s);
    c.km_form = detect_km_form(s.p(), c.orbit);
    return c;
}

SlopePair reversal_partner(const ContinuedFraction& cf) {
    std::vector<Integer> reversed(cf.coefficients().rbegin(), cf.coefficients().rend());
    auto [num, den] = evaluate_fraction(reversed);
    return SlopePair(num, den);
}

ContinuedFraction flip_expansion(const ContinuedFraction& cf) {
    const auto& a = cf.coefficients();
    if (a.front() == 1) {
        std::vector<Integer> tail(a.begin() + 1, a.end());
        tail.front() += 1;
        return ContinuedFraction(std::move(tail));
    }
    // p/q = [a1, ...] with a1 > 1 gives p/(p-q) = [1, a1 - 1, a2, ...].
    std::vector<Integer> out;
    out.reserve(a.size() + 1);
    out.push_back(1);
    out.push_back(a.front() - 1);
    out.insert(out.end(), a.begin() + 1, a.end());
    return ContinuedFraction(std::move(out));
}

}  // namespace bridgecover
