#include "bridgecover/fundgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bridgecover {

void GroupPresentation::recount() {
    triangular_count = short_count = degenerate_count = 0;
    for (const auto& w : relators) {
        if (w.size() == 3) {
            ++triangular_count;
            std::set<int> gens;
            for (const auto& l : w) gens.insert(l.generator);
            if (gens.size() < 3) ++degenerate_count;
        } else if (w.size() <= 2) {
            ++short_count;
        }
    }
}

GroupPresentation presentation_from_scheme(const MinkusScheme& sch) {
    const auto q = quotient_skeleton(sch);
    const int faces = sch.n() * (sch.p() - 1);
    GroupPresentation g;
    for (int k = 0; k < q.edge_classes; ++k) g.generators.push_back("g" + std::to_string(k));

    // Boundary of (N, v_t, v_{t+1}): N -> v_t, v_t -> v_{t+1}, v_{t+1} -> N.
    for (int f = 0; f < faces; ++f) {
        const auto& tri = sch.triangles()[f];
        Word w;
        for (int k : {2, 0, 1}) {
            const int e = tri.edges[k];
            const auto& ends = sch.edge_ends(e);
            const int along = ends[0] == tri.vertices[(k + 1) % 3] ? 1 : -1;
            w.push_back({q.edge_class[e], along * q.edge_sign[e]});
        }
        g.relators.push_back(std::move(w));
    }

    // Spanning tree of the quotient 1-skeleton grown from the class of N.
    std::vector<std::vector<std::pair<int, int>>> adj(q.vertex_classes);
    for (int k = 0; k < q.edge_classes; ++k) {
        const auto& ends = sch.edge_ends(q.class_representative[k]);
        const int a = q.vertex_class[ends[0]], b = q.vertex_class[ends[1]];
        adj[a].push_back({k, b});
        adj[b].push_back({k, a});
    }
    std::vector<bool> reached(q.vertex_classes, false);
    std::vector<int> tree;
    std::vector<int> frontier{q.vertex_class[0]};
    reached[q.vertex_class[0]] = true;
    for (std::size_t i = 0; i < frontier.size(); ++i)
        for (auto [k, v] : adj[frontier[i]]) {
            if (reached[v]) continue;
            reached[v] = true;
            tree.push_back(k);
            frontier.push_back(v);
        }
    std::sort(tree.begin(), tree.end());
    for (int k : tree) g.relators.push_back({{k, 1}});
    g.recount();
    return g;
}

namespace {

Word invert(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
    return out;
}

Word cyclic_key(const Word& w) {
    Word best = w;
    for (const Word& base : {w, invert(w)})
        for (std::size_t r = 0; r < base.size(); ++r) {
            Word rot(base.begin() + r, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + r);
            best = std::min(best, rot);
        }
    return best;
}

}  // namespace

GroupPresentation deduplicate(const GroupPresentation& g) {
    GroupPresentation out;
    out.generators = g.generators;
    std::set<Word> seen;
    for (const auto& w : g.relators)
        if (seen.insert(cyclic_key(w)).second) out.relators.push_back(w);
    out.recount();
    return out;
}

HomologyResult abelianization(const GroupPresentation& g) {
    IntegerMatrix m(static_cast<int>(g.relators.size()), static_cast<int>(g.generators.size()));
    for (std::size_t r = 0; r < g.relators.size(); ++r)
        for (const auto& l : g.relators[r]) m.at(static_cast<int>(r), l.generator) += l.exponent;
    return cokernel(m);
}

Integer t_invariant_upper(const SlopePair& s, int n) {
    if (n < 2) throw std::invalid_argument("covering order n must be at least 2");
    return Integer(n) * (s.p() - 1);
}

std::string to_text(const GroupPresentation& g) {
    std::ostringstream os;
    for (const auto& s : g.generators) os << "gen " << s << '\n';
    for (const auto& w : g.relators) {
        os << "rel";
        for (const auto& l : w) os << ' ' << g.generators.at(l.generator) << (l.exponent < 0 ? "^-1" : "");
        os << '\n';
    }
    return os.str();
}

GroupPresentation parse_presentation(const std::string& text) {
    GroupPresentation g;
    std::map<std::string, int> index;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kind, token;
        if (!(ls >> kind)) continue;
        if (kind == "gen") {
            if (!(ls >> token) || index.count(token)) throw std::invalid_argument("bad generator line: " + line);
            index[token] = static_cast<int>(g.generators.size());
            g.generators.push_back(token);
        } else if (kind == "rel") {
            Word w;
            while (ls >> token) {
                int exponent = 1;
                if (token.size() > 3 && token.compare(token.size() - 3, 3, "^-1") == 0) {
                    exponent = -1;
                    token.resize(token.size() - 3);
                }
                auto it = index.find(token);
                if (it == index.end()) throw std::invalid_argument("unknown generator: " + token);
                w.push_back({it->second, exponent});
            }
            g.relators.push_back(std::move(w));
        } else {
            throw std::invalid_argument("unrecognised presentation line: " + line);
        }
    }
    g.recount();
    return g;
}

}  // namespace bridgecover
