#include <doctest.h>

#include <numeric>

#include "bridgecover/fundgroup.hpp"

using namespace bridgecover;

TEST_CASE("abelianization of small presentations") {
    const auto cyclic = parse_presentation("gen x\nrel x x x\n");
    CHECK(abelianization(cyclic) == HomologyResult{0, {Integer(3)}});
    const auto free2 = parse_presentation("gen a\ngen b\n");
    CHECK(abelianization(free2) == HomologyResult{2, {}});
    const auto mixed = parse_presentation("gen a\ngen b\nrel a b a^-1 \nrel b b\n");
    CHECK(abelianization(mixed) == HomologyResult{1, {}});
    CHECK_THROWS_AS(parse_presentation("gen a\nrel c\n"), std::invalid_argument);
}

TEST_CASE("presentation of (5,3), n = 3") {
    const auto sch = build_scheme(SlopePair(5, 3), 3, 1);
    const auto g = presentation_from_scheme(sch);
    CHECK(g.triangular_count == 12);
    CHECK(g.triangular_count + g.short_count == static_cast<int>(g.relators.size()));
    CHECK(abelianization(g) == HomologyResult{0, {Integer(4), Integer(4)}});
    CHECK(abelianization(g) == homology(quotient_complex(sch), 1));
}

TEST_CASE("presentation counts for small cases") {
    CHECK(presentation_from_scheme(build_scheme(SlopePair(2, 1), 2, 1)).triangular_count == 2);
    CHECK(abelianization(presentation_from_scheme(build_scheme(SlopePair(5, 2), 2, 1))) ==
          HomologyResult{0, {Integer(5)}});
    CHECK(t_invariant_upper(SlopePair(5, 2), 3) == 12);
    CHECK(t_invariant_upper(SlopePair(2, 1), 2) == 2);
    CHECK(t_invariant_upper(SlopePair(7, 3), 5) == 30);
    CHECK(presentation_from_scheme(build_scheme(SlopePair(7, 3), 5, 1)).triangular_count == 30);
}

TEST_CASE("relators trace closed loops in the quotient 1-skeleton") {
    for (int p = 2; p <= 13; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int n = 2; n <= 8; ++n)
                for (int m = 1; m < n; ++m) {
                    const SlopePair s(p, q);
                    if (!scheme_parameter_error(s, n, m).empty()) continue;
                    const auto sch = build_scheme(s, n, m);
                    const auto g = presentation_from_scheme(sch);
                    const auto sk = quotient_skeleton(sch);
                    CHECK(g.triangular_count == n * (p - 1));
                    CHECK(abelianization(g) == homology(quotient_complex(sch), 1));
                    for (const auto& w : g.relators) {
                        CHECK(w.size() <= 3);
                        for (const auto& l : w) {
                            CHECK(l.generator >= 0);
                            CHECK(l.generator < static_cast<int>(g.generators.size()));
                        }
                        if (w.size() != 3) continue;
                        // Endpoints of each signed letter, as quotient vertex classes.
                        auto ends = [&](const Letter& l) {
                            const auto& e = sch.edge_ends(sk.class_representative[l.generator]);
                            const int a = sk.vertex_class[e[0]], b = sk.vertex_class[e[1]];
                            return l.exponent > 0 ? std::pair{a, b} : std::pair{b, a};
                        };
                        CHECK(ends(w[0]).first == sk.vertex_class[0]);
                        for (int i = 0; i < 3; ++i) CHECK(ends(w[i]).second == ends(w[(i + 1) % 3]).first);
                    }
                }
        }
}

TEST_CASE("text export and deduplication") {
    const auto g = presentation_from_scheme(build_scheme(SlopePair(3, 1), 2, 1));
    const auto text = to_text(g);
    CHECK(text.rfind("gen g0\n", 0) == 0);
    const auto back = parse_presentation(text);
    CHECK(back.relators == g.relators);
    CHECK(to_text(back) == text);

    const auto dup = parse_presentation("gen a\ngen b\nrel a b\nrel b a\nrel b^-1 a^-1\nrel a\n");
    const auto d = deduplicate(dup);
    CHECK(d.relators.size() == 2);
    CHECK(abelianization(d) == abelianization(dup));
}

TEST_CASE("degenerate relators are counted") {
    const auto g = parse_presentation("gen a\ngen b\nrel a a b\nrel a b a^-1\nrel a\n");
    CHECK(g.triangular_count == 2);
    CHECK(g.degenerate_count == 2);
    CHECK(g.short_count == 1);
}
