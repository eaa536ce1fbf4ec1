// Reference computations that share no code with the library under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bridgecover/diagram.hpp"

namespace oracle {

using i64 = std::int64_t;

// Back-to-front evaluation of [a1, ..., ak].
inline std::pair<i64, i64> evaluate(const std::vector<i64>& a) {
    i64 num = a.back(), den = 1;
    for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
        const i64 next = *it * num + den;
        den = num;
        num = next;
    }
    const i64 g = std::gcd(num, den);
    return {num / g, den / g};
}

// All positive expansions of num/den, found by trying every first entry.
inline void expansions(i64 num, i64 den, std::vector<i64>& prefix, std::vector<std::vector<i64>>& out) {
    for (i64 a = 1; a * den <= num; ++a) {
        const i64 rem = num - a * den;  // num/den - a = rem/den
        prefix.push_back(a);
        if (rem == 0) {
            out.push_back(prefix);
        } else if (den >= rem) {
            expansions(den, rem, prefix, out);  // remainder of the tail must be >= 1
        }
        prefix.pop_back();
    }
}

inline std::set<i64> orbit(i64 p, i64 q) {
    std::set<i64> o{q, p - q};
    for (i64 r = 1; r < p; ++r)
        if ((q * r) % p == 1) {
            o.insert(r);
            o.insert(p - r);
        }
    return o;
}

inline std::vector<i64> minimized_by_search(i64 p, i64 q) {
    std::vector<std::vector<i64>> all;
    std::vector<i64> prefix;
    expansions(p, q, prefix, all);
    for (const auto& e : all)
        if (e.size() == 1 || e.back() > 1) return e;
    return {};
}

inline std::size_t orbit_min_length(i64 p, i64 q) {
    std::size_t best = SIZE_MAX;
    for (i64 r : orbit(p, q)) best = std::min(best, minimized_by_search(p, r).size());
    return best;
}

// Spanning trees of the Tait graph built from a checkerboard colouring.
inline mpz_class tait_determinant(const bridgecover::ConwayDiagram& d) {
    using bridgecover::Side;
    const int F = static_cast<int>(d.regions().size());
    std::vector<int> colour(F, -1);
    colour[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        for (int c = 0; c < d.crossing_count(); ++c) {
            const int n = d.region_at(c, Side::North), s = d.region_at(c, Side::South);
            const int w = d.region_at(c, Side::West), e = d.region_at(c, Side::East);
            for (auto [x, y, same] : {std::tuple{n, s, 1}, {w, e, 1}, {n, w, 0}, {s, e, 0}}) {
                for (auto [from, to] : {std::pair{x, y}, std::pair{y, x}}) {
                    if (from != f) continue;
                    const int want = same ? colour[f] : 1 - colour[f];
                    if (colour[to] < 0) {
                        colour[to] = want;
                        stack.push_back(to);
                    } else if (colour[to] != want) {
                        return -1;
                    }
                }
            }
        }
    }
    std::map<int, int> index;
    for (int f = 0; f < F; ++f)
        if (colour[f] == 0) index.emplace(f, static_cast<int>(index.size()));
    const int V = static_cast<int>(index.size());
    std::vector<std::vector<mpq_class>> lap(V, std::vector<mpq_class>(V));
    for (int c = 0; c < d.crossing_count(); ++c) {
        int a = d.region_at(c, Side::North), b = d.region_at(c, Side::South);
        if (colour[a] != 0) {
            a = d.region_at(c, Side::West);
            b = d.region_at(c, Side::East);
        }
        const int i = index.at(a), j = index.at(b);
        if (i == j) continue;
        lap[i][i] += 1;
        lap[j][j] += 1;
        lap[i][j] -= 1;
        lap[j][i] -= 1;
    }
    // Determinant of the reduced Laplacian by exact elimination.
    const int n = V - 1;
    mpq_class det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && lap[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(lap[piv], lap[col]);
            det = -det;
        }
        det *= lap[col][col];
        for (int r = col + 1; r < n; ++r) {
            const mpq_class f = lap[r][col] / lap[col][col];
            for (int k = col; k < n; ++k) lap[r][k] -= f * lap[col][k];
        }
    }
    return abs(mpz_class(det));
}

}  // namespace oracle
