#include <doctest.h>

#include <numeric>

#include "bridgecover/minkus.hpp"
#include "bridgecover/verify.hpp"

using namespace bridgecover;

TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(build_scheme(SlopePair(5, 3), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_scheme(SlopePair(5, 3), 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_scheme(SlopePair(8, 3), 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_scheme(SlopePair(8, 3), 4, 4), std::invalid_argument);
    CHECK_NOTHROW(build_scheme(SlopePair(8, 3), 3, 2));
    CHECK_NOTHROW(build_scheme(SlopePair(8, 3), 4, 3));
}

TEST_CASE("scheme for (5,3), n = 3") {
    const auto sch = build_scheme(SlopePair(5, 3), 3, 1);
    CHECK(sch.vertex_count() == 2 + 3 * 4);
    for (int i = 0; i < 3; ++i) {
        const auto& r = sch.region(i);
        const auto& rp = sch.primed_region(i);
        CHECK(r.vertices.size() == 6);
        CHECK(r.edges.size() == 6);
        CHECK(rp.edges.size() == 6);
        CHECK(r.vertices[0] == 0);
        CHECK(r.vertices[r.marked] == sch.vertex(i, 3));
        // P_i of R_i goes to P_{i-1}, which opens R'_i.
        CHECK(rp.vertices[rp.marked] == sch.vertex(i - 1, 3));
        CHECK(sch.pairing(i).vertex_map[r.marked] == rp.marked);
    }
    CHECK(sch.winding() == 1);
}

TEST_CASE("smallest scheme") {
    const auto sch = build_scheme(SlopePair(2, 1), 2, 1);
    for (int i = 0; i < 2; ++i) CHECK(sch.region(i).edges.size() == 3);
    CHECK(triangulate(sch).tet_count() == 2);
}

TEST_CASE("even p anchors P_i to P_{i-m}") {
    const auto sch = build_scheme(SlopePair(8, 3), 3, 2);
    CHECK(sch.winding() == 2);
    for (int i = 0; i < 3; ++i) {
        const auto& rp = sch.primed_region(i);
        CHECK(rp.vertices[rp.marked] == sch.vertex(i - 2, 3));
    }
}

TEST_CASE("scheme invariants over the grid") {
    for (int p = 2; p <= 13; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int n = 2; n <= 6; ++n)
                for (int m = 1; m < n; ++m) {
                    const SlopePair s(p, q);
                    if (!scheme_parameter_error(s, n, m).empty()) continue;
                    const auto sch = build_scheme(s, n, m);
                    // Every sphere edge borders exactly one R region and one R' region.
                    std::vector<int> uses(sch.edge_count(), 0);
                    for (int i = 0; i < n; ++i) {
                        for (int e : sch.region(i).edges) ++uses[e];
                        for (int e : sch.primed_region(i).edges) ++uses[e];
                        CHECK(static_cast<int>(sch.region(i).edges.size()) == p + 1);
                        CHECK(sch.region(i).vertices[sch.region(i).marked] == sch.vertex(i, q));
                    }
                    for (int u : uses) CHECK(u == 2);
                    // Pairings reverse orientation: images of R triangles run clockwise.
                    for (const auto& t : sch.triangles()) CHECK(triangle_orientation(sch, t) == (t.primed ? -1 : 1));
                    CHECK(triangulate(sch).tet_count() == n * (p - 1));
                }
        }
}

TEST_CASE("coning matches the boundary pairings") {
    // The base of tetrahedron T is the primed triangle T, and the apex face
    // structure reproduces the R triangle paired with it.
    const auto sch = build_scheme(SlopePair(7, 3), 4, 1);
    const auto tri = triangulate(sch);
    const int tets = tri.tet_count();
    for (int T = 0; T < tets; ++T) {
        const auto& g = *tri.gluing(T, 0);
        const auto& tau = sch.triangles()[T];
        const auto& img = sch.triangles()[tets + T];
        CHECK(img.region == tau.region);
        CHECK(img.index == tau.index);
        CHECK(g.perm[0] == g.face);
    }
}

TEST_CASE("deck rotation is a symmetry of the triangulation") {
    for (auto [p, q, n, m] : {std::tuple{5, 3, 3, 1}, {7, 2, 4, 1}, {8, 3, 5, 2}, {6, 1, 5, 3}}) {
        const auto sch = build_scheme(SlopePair(p, q), n, m);
        const auto tri = triangulate(sch);
        const int fan = p - 1;
        auto rotate = [&](int T) { return ((T / fan + 1) % n) * fan + T % fan; };
        for (int T = 0; T < tri.tet_count(); ++T)
            for (int f = 0; f < 4; ++f) {
                const auto& g = *tri.gluing(T, f);
                const auto& h = *tri.gluing(rotate(T), f);
                CHECK(h.tet == rotate(g.tet));
                CHECK(h.face == g.face);
                CHECK(h.perm == g.perm);
            }
    }
}

TEST_CASE("quotient complex shape") {
    const auto c = quotient_complex(build_scheme(SlopePair(5, 3), 3, 1));
    CHECK(c.cells[2] == 12);
    CHECK(c.cells[3] == 1);
    CHECK(c.euler_characteristic() == 0);
    CHECK_NOTHROW(check_chain_complex(c));
    for (int p : {3, 5, 7, 9}) {
        const auto d = quotient_complex(build_scheme(SlopePair(p, 2), 2, 1));
        CHECK(d.cells[2] == 2 * (p - 1));
        CHECK(d.boundary[2].is_zero());
    }
}
