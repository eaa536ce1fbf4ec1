// Exact arithmetic on two-bridge slopes p/q: continued fractions, the
// invariant ell(p,q) and classification up to link equivalence.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bridgecover {

using Integer = mpz_class;

std::string to_string(const Integer& value);

// Converts to int, throwing std::out_of_range if the value does not fit.
int to_int(const Integer& value);

/// A coprime pair with p >= 2 and 0 < q < p, naming the link K(p,q).
class SlopePair {
public:
    /// Throws std::invalid_argument unless p >= 2, 0 < q < p and gcd(p,q) = 1.
    SlopePair(Integer p, Integer q);

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }

    bool operator==(const SlopePair& other) const { return p_ == other.p_ && q_ == other.q_; }

    std::string str() const;

private:
    Integer p_;
    Integer q_;
};

/// Returns an empty string if (p,q) is a valid slope, otherwise the reason.
std::string slope_error(const Integer& p, const Integer& q);

/// Positive continued fraction [a1, ..., ak] = a1 + 1/(a2 + ... + 1/ak).
class ContinuedFraction {
public:
    /// Throws std::invalid_argument on an empty list or a non-positive entry.
    /// With `minimize` set, a trailing 1 is folded into its predecessor.
    explicit ContinuedFraction(std::vector<Integer> coefficients, bool minimize = true);

    const std::vector<Integer>& coefficients() const { return coefficients_; }
    std::size_t length() const { return coefficients_.size(); }
    bool minimized() const { return minimized_; }

    std::string str() const;

private:
    std::vector<Integer> coefficients_;
    bool minimized_ = false;
};

struct KmForm {
    Integer k;
    Integer m;
};

struct LinkClass {
    SlopePair canonical;
    std::set<Integer> orbit;  // q-representatives of the class, all in [1, p-1]
    bool is_knot = false;
    bool is_torus = false;
    bool is_hyperbolic = false;
    int ell = 0;
    std::optional<KmForm> km_form;
};

ContinuedFraction minimized_expansion(const SlopePair& s);

/// The convergent recurrence returns lowest terms directly. Throws
/// std::invalid_argument for [1], the only positive list whose value is not a slope.
SlopePair evaluate_cf(const ContinuedFraction& cf);

/// Numerator and denominator of the fraction without slope validation.
std::pair<Integer, Integer> evaluate_fraction(const std::vector<Integer>& coefficients);

int ell(const SlopePair& s);

/// q' values equivalent to q: {q, p-q, r, p-r} with q*r = 1 (mod p).
std::set<Integer> equivalence_orbit(const SlopePair& s);

bool equivalent(const SlopePair& a, const SlopePair& b);

LinkClass classify(const SlopePair& s);

/// Evaluates the reversed coefficient list [ak, ..., a1].
SlopePair reversal_partner(const ContinuedFraction& cf);

/// Expansion of p/(p-q) given the minimized expansion of p/q.
ContinuedFraction flip_expansion(const ContinuedFraction& cf);

}  // namespace bridgecover
