#include "bridgecover/report.hpp"

#include <numeric>
#include <stdexcept>

namespace bridgecover {

namespace {

void expect(CaseReport& r, bool ok, const std::string& what) {
    if (!ok) r.failures.push_back(what);
}

}  // namespace

CaseReport analyze_case(const CaseParameters& params, std::optional<double> vol) {
    const SlopePair s(params.p, params.q);
    if (auto err = scheme_parameter_error(s, params.n, params.m); !err.empty()) throw std::invalid_argument(err);

    CaseReport r;
    r.params = params;
    r.link = classify(s);
    r.expansion = minimized_expansion(s);
    r.twists = analyze_twists(s);
    expect(r, r.twists.twist_number == r.link.ell, "twist number differs from ell");
    expect(r, r.twists.twist_reduced, "Conway diagram is not twist-reduced");

    const auto scheme = build_scheme(s, params.n, params.m);
    r.winding = scheme.winding();
    r.scheme_regions = 2 * scheme.n();
    r.region_edges = static_cast<int>(scheme.region(0).edges.size());

    try {
        const auto tri = triangulate(scheme);
        r.validation = validate_triangulation(tri);
        const auto complex = induced_complex(tri);
        for (int d = 0; d <= 3; ++d) r.homology.push_back(homology(complex, d));
        const auto cw = quotient_complex(scheme);
        r.cw_cells = cw.cells;
        r.cw_h1 = homology(cw, 1);
        expect(r, homology(cw, 3) == HomologyResult{1, {}}, "quotient complex has H_3 != Z");
        r.presentation = presentation_from_scheme(scheme);
        r.deduplicated_relators = static_cast<int>(deduplicate(r.presentation).relators.size());
        r.abelianization = abelianization(r.presentation);
    } catch (const std::logic_error& e) {
        // std::invalid_argument derives from logic_error; both signal a construction defect here.
        r.failures.push_back(std::string("construction failed: ") + e.what());
        r.bounds = bounds_report(s, params.n, vol);
        return r;
    }

    const Integer tets = Integer(params.n) * (params.p - 1);
    expect(r, r.validation.tet_count == tets, "tetrahedron count differs from n(p-1)");
    expect(r, r.validation.closed_manifold, "triangulation is not a closed manifold");
    expect(r, r.validation.orientable, "triangulation is not orientable");
    expect(r, r.homology[0] == HomologyResult{1, {}}, "H_0 != Z");
    expect(r, r.homology[3] == HomologyResult{1, {}}, "H_3 != Z");
    expect(r, r.homology[1] == r.cw_h1, "H_1 differs between triangulation and quotient complex");
    expect(r, r.abelianization == r.cw_h1, "abelianization differs from H_1");
    expect(r, r.presentation.triangular_count == tets, "triangular relator count differs from n(p-1)");
    if (params.n == 2) {
        expect(r, r.cw_h1 == HomologyResult{0, {s.p()}} || (params.p == 2 && r.cw_h1 == HomologyResult{0, {2}}),
               "double cover is not the lens space L(p,q)");
    }

    r.bounds = bounds_report(s, params.n, vol);
    expect(r, t_invariant_upper(s, params.n) == r.bounds.upper, "T-invariant bound differs from n(p-1)");
    if (r.bounds.improved_upper) expect(r, *r.bounds.improved_upper <= r.bounds.upper, "improved bound exceeds n(p-1)");
    if (r.bounds.lower)
        for (const auto& e : r.bounds.lower->candidates)
            if (e.valid) expect(r, e.value < r.bounds.upper.get_d(), "lower bound exceeds upper bound");
    return r;
}

std::vector<CaseParameters> sweep_cases(int p_max, int n_max) {
    std::vector<CaseParameters> cases;
    for (int p = 2; p <= p_max; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int n = 2; n <= n_max; ++n) {
                if (p % 2 == 1) {
                    cases.push_back({p, q, n, 1});
                    continue;
                }
                for (int m = 1; m < n; ++m)
                    if (std::gcd(m, n) == 1) cases.push_back({p, q, n, m});
            }
        }
    return cases;
}

std::vector<CaseReport> sweep_serial(const std::vector<CaseParameters>& cases) {
    std::vector<CaseReport> out;
    out.reserve(cases.size());
    for (const auto& c : cases) out.push_back(analyze_case(c));
    return out;
}

std::vector<CaseReport> sweep_parallel(const std::vector<CaseParameters>& cases) {
    std::vector<CaseReport> out(cases.size());
    const long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) out[i] = analyze_case(cases[i]);
    return out;
}

Json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

namespace {

Json estimate_json(const LowerEstimate& e) {
    return Json{{"c", format6(e.c)},
                {"value", format6(e.value)},
                {"valid", e.valid},
                {"valid_from_n", e.valid_from},
                {"in_domain", e.in_domain}};
}

}  // namespace

Json to_json(const LinkClass& c) {
    Json orbit = Json::array();
    for (const auto& q : c.orbit) orbit.push_back(integer_json(q));
    Json j{{"canonical", {integer_json(c.canonical.p()), integer_json(c.canonical.q())}},
           {"orbit", orbit},
           {"is_knot", c.is_knot},
           {"is_torus", c.is_torus},
           {"is_hyperbolic", c.is_hyperbolic},
           {"ell", c.ell}};
    j["km_form"] = c.km_form ? Json{{"k", integer_json(c.km_form->k)}, {"m", integer_json(c.km_form->m)}} : Json();
    return j;
}

Json to_json(const HomologyResult& h) {
    Json torsion = Json::array();
    for (const auto& d : h.torsion) torsion.push_back(integer_json(d));
    return Json{{"free_rank", h.free_rank}, {"torsion", torsion}, {"text", h.str()}};
}

Json to_json(const ValidationReport& r) {
    Json links = Json::array();
    for (const auto& l : r.vertex_links) links.push_back({{"chi", l.chi}, {"connected", l.connected}});
    return Json{{"tet_count", r.tet_count},
                {"chi", r.chi},
                {"orientable", r.orientable},
                {"all_faces_glued", r.all_faces_glued},
                {"involutive", r.involutive},
                {"vertices", r.vertices},
                {"edges", r.edges},
                {"faces", r.faces},
                {"vertex_links", links},
                {"closed_manifold", r.closed_manifold}};
}

Json to_json(const BoundsReport& r) {
    Json j{{"slope", {integer_json(r.slope.p()), integer_json(r.slope.q())}},
           {"n", r.n},
           {"upper", integer_json(r.upper)}};
    j["improved_upper"] = r.improved_upper ? integer_json(*r.improved_upper) : Json();
    if (r.lower) {
        Json cands = Json::array();
        for (const auto& e : r.lower->candidates) cands.push_back(estimate_json(e));
        j["lower"] = Json{{"ell", r.lower->ell}, {"coefficient", format6(r.lower->coefficient)}, {"candidates", cands}};
        j["lower_reason"] = Json();
    } else {
        j["lower"] = Json();
        j["lower_reason"] = r.lower_reason;
    }
    j["vol_lower"] = r.vol_lower ? Json(format6(*r.vol_lower)) : Json();
    j["vol_upper"] = r.vol_upper ? Json(format6(*r.vol_upper)) : Json();
    j["vol_input"] = r.vol_input ? Json(format6(*r.vol_input)) : Json();
    if (r.vol_input) {
        Json cands = Json::array();
        for (const auto& e : r.vol_based_cover_lower) cands.push_back(estimate_json(e));
        j["vol_based_cover_lower"] = cands;
    } else {
        j["vol_based_cover_lower"] = Json();
    }
    j["is_hyperbolic"] = r.is_hyperbolic;
    j["excluded_pair"] = r.excluded_pair;
    return j;
}

Json to_json(const CaseReport& r) {
    Json coeffs = Json::array();
    for (const auto& a : r.expansion.coefficients()) coeffs.push_back(integer_json(a));
    Json analyzed = Json::array();
    for (const auto& a : r.twists.analyzed.coefficients()) analyzed.push_back(integer_json(a));
    Json homology = Json::array();
    for (const auto& h : r.homology) homology.push_back(to_json(h));
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back(f);
    return Json{
        {"input", {{"p", r.params.p}, {"q", r.params.q}, {"n", r.params.n}, {"m", r.params.m}}},
        {"link", to_json(r.link)},
        {"expansion", coeffs},
        {"twist", {{"twist_number", r.twists.twist_number},
                   {"twist_reduced", r.twists.twist_reduced},
                   {"mirrored", r.twists.mirrored},
                   {"analyzed_expansion", analyzed}}},
        {"scheme", {{"regions", r.scheme_regions}, {"region_edges", r.region_edges}, {"winding", r.winding}}},
        {"validation", to_json(r.validation)},
        {"homology", homology},
        {"cw_complex", {{"cells", r.cw_cells}, {"h1", to_json(r.cw_h1)}}},
        {"presentation", {{"generators", r.presentation.generators.size()},
                          {"relators", r.presentation.relators.size()},
                          {"deduplicated_relators", r.deduplicated_relators},
                          {"triangular_count", r.presentation.triangular_count},
                          {"short_count", r.presentation.short_count},
                          {"degenerate_count", r.presentation.degenerate_count},
                          {"abelianization", to_json(r.abelianization)}}},
        {"bounds", to_json(r.bounds)},
        {"consistent", r.consistent()},
        {"failures", failures}};
}

}  // namespace bridgecover
