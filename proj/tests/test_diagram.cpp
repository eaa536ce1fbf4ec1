#include <doctest.h>

#include <numeric>

#include "bridgecover/diagram.hpp"
#include "oracles.hpp"

using namespace bridgecover;

namespace {

ConwayDiagram conway(int p, int q) { return build_conway(minimized_expansion(SlopePair(p, q))); }

}  // namespace

TEST_CASE("crossing counts of the figure diagrams") {
    CHECK(ConwayDiagram({1, 1, 3, 3}).crossing_count() == 8);
    CHECK(ConwayDiagram({2, 2, 2}).crossing_count() == 6);
    CHECK(ConwayDiagram({2}).crossing_count() == 2);
    CHECK_THROWS_AS(ConwayDiagram({}), std::invalid_argument);
    CHECK_THROWS_AS(ConwayDiagram({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_conway(ContinuedFraction({Integer(2), Integer(1)}, false)), std::invalid_argument);
}

TEST_CASE("twist numbers of the figure diagrams") {
    CHECK(twist_number(ConwayDiagram({1, 1, 3, 3})) == 3);
    CHECK(twist_number(ConwayDiagram({2, 2, 2})) == 3);
    CHECK(twist_number(ConwayDiagram({5})) == 1);
    CHECK(twist_number(ConwayDiagram({1, 2, 3})) == twist_number(ConwayDiagram({3, 3})));
}

TEST_CASE("region graph of [2,2,2]") {
    const auto g = region_graph(ConwayDiagram({2, 2, 2}));
    CHECK(g.vertex_count == 5);
    CHECK(g.multiplicity(0, 2) == 2);
    CHECK(g.multiplicity(0, 4) == 2);
    CHECK(g.multiplicity(1, 3) == 2);
    CHECK(g.edges.size() == 3);
    CHECK(g == region_graph_rule({2, 2, 2}));
}

TEST_CASE("region graphs of [2,3] and [3]") {
    const auto even = region_graph(ConwayDiagram({2, 3}));
    CHECK(even.multiplicity(0, 2) == 2);
    CHECK(even.multiplicity(1, 3) == 3);
    CHECK(even.edges.size() == 2);
    const auto single = region_graph(ConwayDiagram({3}));
    CHECK(single.vertex_count == 3);
    CHECK(single.multiplicity(0, 2) == 3);
    CHECK(single.edges.size() == 1);
}

TEST_CASE("mirror guidance for a1 = 1") {
    const ConwayDiagram d({1, 1, 3, 3});
    CHECK_THROWS_WITH_AS(region_graph(d), doctest::Contains("K(p, p-q)"), std::invalid_argument);
    CHECK_THROWS_AS(is_twist_reduced(d), std::invalid_argument);
    const auto t = analyze_twists(SlopePair(23, 13));
    CHECK(t.mirrored);
    CHECK(t.twist_number == 3);
    CHECK(t.analyzed.coefficients() == std::vector<Integer>{2, 3, 3});
    CHECK(t.twist_reduced);
}

TEST_CASE("twist reducedness of small forms") {
    CHECK(is_twist_reduced(ConwayDiagram({2, 2, 2})));
    CHECK(is_twist_reduced(ConwayDiagram({2, 3})));
    CHECK(is_twist_reduced(ConwayDiagram({7})));
}

TEST_CASE("diagram structure against independent invariants") {
    for (int p = 2; p <= 60; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto d = conway(p, q);
            const auto& a = d.coefficients();
            const int total = std::accumulate(a.begin(), a.end(), 0);
            CHECK(d.crossing_count() == total);
            CHECK(static_cast<int>(d.regions().size()) == total + 2);
            CHECK(d.is_alternating());
            CHECK(d.component_count() == (p % 2 == 1 ? 1 : 2));
            CHECK(oracle::tait_determinant(d) == p);
            if (a.front() > 1 && d.block_count() >= 2) {
                int excess = 0;
                for (int x : a) excess += x - 1;
                CHECK(d.bigon_count() == excess);
                CHECK(static_cast<int>(d.regions().size()) - d.bigon_count() == d.block_count() + 2);
            }
        }
}

TEST_CASE("twist number equals ell up to p = 200") {
    for (int p = 2; p <= 200; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CHECK(twist_number(conway(p, q)) == ell(SlopePair(p, q)));
        }
}

TEST_CASE("region graph rule and twist reducedness for a1 > 1") {
    for (int p = 2; p <= 80; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto d = conway(p, q);
            if (d.coefficients().front() == 1) continue;
            const auto g = region_graph(d);
            CHECK(g == region_graph_rule(d.coefficients()));
            CHECK(is_twist_reduced(d));
        }
}

TEST_CASE("mirror partner has the same twist number") {
    for (int p = 3; p <= 100; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto cf = minimized_expansion(SlopePair(p, q));
            if (cf.coefficients().front() != 1) continue;
            CHECK(twist_number(build_conway(cf)) == twist_number(build_conway(flip_expansion(cf))));
        }
}

TEST_CASE("text dump") {
    const auto text = dump_crossings(ConwayDiagram({2, 1}));
    CHECK(text == "conway 2 1\n1 0 middle\n1 1 middle\n2 0 lower\n");
}
