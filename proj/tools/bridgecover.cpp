// Command-line front end. Exit codes: 0 success, 2 bad input, 3 internal defect.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "bridgecover/report.hpp"

namespace bc = bridgecover;

namespace {

constexpr int kUsage = 2;
constexpr int kDefect = 3;

struct Defect : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bc::Integer parse_integer(const std::string& text, const char* name) {
    bc::Integer x;
    if (text.empty() || x.set_str(text, 10) != 0) throw std::invalid_argument(std::string(name) + " is not an integer");
    return x;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::invalid_argument("failed writing " + path);
}

void emit(const bc::Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<bc::Integer>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
    return s + "]";
}

int run_classify(const std::string& ptext, const std::string& qtext, bool json) {
    const bc::SlopePair s(parse_integer(ptext, "p"), parse_integer(qtext, "q"));
    const auto c = bc::classify(s);
    const auto cf = bc::minimized_expansion(s);
    if (json) {
        auto j = bc::to_json(c);
        bc::Json coeffs = bc::Json::array();
        for (const auto& a : cf.coefficients()) coeffs.push_back(bc::integer_json(a));
        j["expansion"] = coeffs;
        emit(j);
        return 0;
    }
    std::cout << "K" << s.str() << ": " << (c.is_knot ? "knot" : "2-component link") << ", "
              << (c.is_torus ? "torus" : "hyperbolic") << '\n';
    std::cout << "expansion " << join(cf.coefficients()) << '\n';
    std::cout << "ell " << c.ell << '\n';
    std::cout << "canonical " << c.canonical.str() << ", orbit {";
    bool first = true;
    for (const auto& q : c.orbit) {
        std::cout << (first ? "" : ",") << q.get_str();
        first = false;
    }
    std::cout << "}\n";
    if (c.km_form) std::cout << "km_form k=" << c.km_form->k.get_str() << " m=" << c.km_form->m.get_str() << '\n';
    return 0;
}

int run_diagram(int p, int q) {
    const bc::SlopePair s(p, q);
    const auto d = bc::build_conway(bc::minimized_expansion(s));
    std::cout << bc::dump_crossings(d);
    return 0;
}

bc::CaseReport checked_case(int p, int q, int n, int m, std::optional<double> vol = std::nullopt) {
    auto r = bc::analyze_case({p, q, n, m}, vol);
    if (!r.consistent()) {
        std::string msg = "internal consistency failure:";
        for (const auto& f : r.failures) msg += "\n  " + f;
        throw Defect(msg);
    }
    return r;
}

int run_triangulate(int p, int q, int n, int m, const std::string& out, bool homology, bool json) {
    const auto scheme = bc::build_scheme(bc::SlopePair(p, q), n, m);
    const auto r = checked_case(p, q, n, m);
    if (!out.empty()) write_file(out, bc::to_text(bc::triangulate(scheme)));
    if (json) {
        bc::Json j{{"tet_count", r.validation.tet_count}, {"validation", bc::to_json(r.validation)}};
        if (homology) {
            bc::Json hs = bc::Json::array();
            for (const auto& h : r.homology) hs.push_back(bc::to_json(h));
            j["homology"] = hs;
        }
        emit(j);
        return 0;
    }
    std::cout << "tetrahedra " << r.validation.tet_count << '\n';
    std::cout << "closed manifold " << (r.validation.closed_manifold ? "yes" : "no") << ", orientable "
              << (r.validation.orientable ? "yes" : "no") << ", chi " << r.validation.chi << ", vertices "
              << r.validation.vertices << '\n';
    if (homology)
        for (int d = 0; d <= 3; ++d) std::cout << "H" << d << " = " << r.homology[d].str() << '\n';
    return 0;
}

void print_estimates(const char* label, const std::vector<bc::LowerEstimate>& es) {
    for (const auto& e : es) {
        std::cout << label << " c=" << bc::format6(e.c) << ": " << bc::format6(e.value)
                  << (e.valid ? " (valid)" : " (not proven for this n; needs n >= " + std::to_string(e.valid_from) + ")")
                  << '\n';
    }
}

int run_bounds(int p, int q, int n, std::optional<double> vol, bool json) {
    const bc::SlopePair s(p, q);
    const auto r = bc::bounds_report(s, n, vol);
    if (json) {
        emit(bc::to_json(r));
        return 0;
    }
    std::cout << "upper " << r.upper.get_str() << '\n';
    if (r.improved_upper) std::cout << "improved upper " << r.improved_upper->get_str() << '\n';
    if (r.lower) {
        print_estimates("lower", r.lower->candidates);
    } else {
        std::cout << "lower absent: " << r.lower_reason << '\n';
    }
    if (r.vol_lower) std::cout << "link volume >= " << bc::format6(*r.vol_lower) << '\n';
    if (r.vol_upper) std::cout << "link volume < " << bc::format6(*r.vol_upper) << '\n';
    if (r.vol_input) {
        std::cout << "volume coefficient " << bc::format6(*r.vol_input / bc::Constants::v3) << '\n';
        print_estimates("volume-based lower", r.vol_based_cover_lower);
    }
    return 0;
}

int run_presentation(int p, int q, int n, int m, const std::string& out, bool dedup, bool json) {
    const auto scheme = bc::build_scheme(bc::SlopePair(p, q), n, m);
    const auto r = checked_case(p, q, n, m);
    auto pres = bc::presentation_from_scheme(scheme);
    if (dedup) pres = bc::deduplicate(pres);
    if (!out.empty()) write_file(out, bc::to_text(pres));
    if (json) {
        emit({{"generators", pres.generators.size()},
              {"relators", pres.relators.size()},
              {"raw_relators", r.presentation.relators.size()},
              {"deduplicated_relators", r.deduplicated_relators},
              {"triangular_count", r.presentation.triangular_count},
              {"short_count", r.presentation.short_count},
              {"degenerate_count", r.presentation.degenerate_count},
              {"abelianization", bc::to_json(r.abelianization)}});
        return 0;
    }
    std::cout << "generators " << pres.generators.size() << ", relators " << pres.relators.size() << '\n';
    std::cout << "triangular relators " << r.presentation.triangular_count << " (degenerate "
              << r.presentation.degenerate_count << "), short relators " << r.presentation.short_count << '\n';
    std::cout << "abelianization " << r.abelianization.str() << '\n';
    return 0;
}

int run_sweep(int p_max, int n_max, const std::string& out, bool force, bool serial) {
    if (p_max < 2 || n_max < 2) throw std::invalid_argument("sweep limits must be at least 2");
    if (!force && (p_max > 25 || n_max > 12)) {
        throw std::invalid_argument("sweep limits above p_max 25 or n_max 12 need --force");
    }
    const auto cases = bc::sweep_cases(p_max, n_max);
    const auto reports = serial ? bc::sweep_serial(cases) : bc::sweep_parallel(cases);
    bc::Json arr = bc::Json::array();
    int failed = 0;
    for (const auto& r : reports) {
        arr.push_back(bc::to_json(r));
        failed += r.consistent() ? 0 : 1;
    }
    const std::string text = arr.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file(out, text);
        std::cout << reports.size() << " cases, " << failed << " inconsistent\n";
    }
    if (failed) throw Defect(std::to_string(failed) + " sweep cases failed internal consistency checks");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangulations, homology and complexity estimates for covers of K(p,q)"};
    app.require_subcommand(1);
    bool json = false, homology = false, force = false, dedup = false, serial = false;
    std::string out, ptext, qtext;
    int p = 0, q = 0, n = 0, m = 1;
    std::optional<double> vol;

    auto* classify = app.add_subcommand("classify", "Continued fraction, ell and equivalence class of K(p,q)");
    classify->add_option("p", ptext)->required();
    classify->add_option("q", qtext)->required();
    classify->add_flag("--json", json);

    auto* diagram = app.add_subcommand("diagram", "Crossing list of the Conway normal form");
    diagram->add_option("p", p)->required();
    diagram->add_option("q", q)->required();

    auto* triangulate = app.add_subcommand("triangulate", "Triangulate M_{n,m}(p,q) and validate it");
    auto* presentation = app.add_subcommand("presentation", "Triangular presentation of the fundamental group");
    for (auto* sub : {triangulate, presentation}) {
        sub->add_option("p", p)->required();
        sub->add_option("q", q)->required();
        sub->add_option("n", n)->required();
        sub->add_option("m", m, "meridian image; 1 for knots")->capture_default_str();
        sub->add_option("--out", out, "write the text format to this path");
        sub->add_flag("--json", json);
    }
    triangulate->add_flag("--homology", homology, "print H_0..H_3");
    presentation->add_flag("--dedup", dedup, "drop repeated relators before writing");

    auto* bounds = app.add_subcommand("bounds", "Complexity and volume estimates");
    bounds->add_option("p", p)->required();
    bounds->add_option("q", q)->required();
    bounds->add_option("n", n)->required();
    bounds->add_option("--vol", vol, "hyperbolic volume of the link complement");
    bounds->add_flag("--json", json);

    auto* sweep = app.add_subcommand("sweep", "Full pipeline over all admissible cases, as JSON");
    sweep->add_option("p_max", p)->required();
    sweep->add_option("n_max", n)->required();
    sweep->add_option("--out", out);
    sweep->add_flag("--force", force, "allow limits beyond p_max 25, n_max 12");
    sweep->add_flag("--serial", serial, "disable the parallel sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*classify) return run_classify(ptext, qtext, json);
        if (*diagram) return run_diagram(p, q);
        if (*triangulate) return run_triangulate(p, q, n, m, out, homology, json);
        if (*bounds) return run_bounds(p, q, n, vol, json);
        if (*presentation) return run_presentation(p, q, n, m, out, dedup, json);
        if (*sweep) return run_sweep(p, n, out, force, serial);
    } catch (const Defect& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDefect;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDefect;
    }
    return kUsage;
}
