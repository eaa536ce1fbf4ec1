#include "bridgecover/verify.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bridgecover {

std::string HomologyResult::str() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& d : torsion) parts.push_back("Z/" + d.get_str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

    // Dense class numbers in order of first appearance.
    std::vector<int> classes(int* count) {
        std::vector<int> id(parent_.size(), -1), out(parent_.size());
        *count = 0;
        for (std::size_t x = 0; x < parent_.size(); ++x) {
            int& c = id[find(static_cast<int>(x))];
            if (c < 0) c = (*count)++;
            out[x] = c;
        }
        return out;
    }

private:
    std::vector<int> parent_;
};

int edge_slot(int x, int y) {
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[x][y];
}

constexpr std::array<std::array<int, 2>, 6> kEdgeVertices = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace

ValidationReport validate_triangulation(const Triangulation& t) {
    ValidationReport r;
    const int T = t.tet_count();
    r.tet_count = T;
    r.free_faces = t.free_face_count();
    r.all_faces_glued = r.free_faces == 0;
    r.involutive = true;
    for (int a = 0; a < T; ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(a, f);
            if (!g) continue;
            const auto& back = t.gluing(g->tet, g->face);
            const bool ok = g->perm[f] == g->face && back && back->tet == a && back->face == f &&
                            back->perm == inverse(g->perm) && !(g->tet == a && g->face == f);
            r.involutive = r.involutive && ok;
        }

    // Orientability: glued tetrahedra must induce opposite orientations on the shared face.
    std::vector<int> orient(T, -1);
    r.orientable = true;
    for (int s = 0; s < T; ++s) {
        if (orient[s] >= 0) continue;
        orient[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = t.gluing(a, f);
                if (!g) continue;
                const int want = orient[a] ^ parity(g->perm) ^ 1;
                if (orient[g->tet] < 0) {
                    orient[g->tet] = want;
                    stack.push_back(g->tet);
                } else if (orient[g->tet] != want) {
                    r.orientable = false;
                }
            }
        }
    }

    UnionFind vuf(4 * T), euf(6 * T), fuf(4 * T);
    // Link vertices are (tet, corner, far vertex); link edges are (tet, corner, face).
    UnionFind luf(12 * T), leuf(16 * T);
    auto link_vertex = [](int a, int x, int y) { return 12 * a + 3 * x + (y < x ? y : y - 1); };
    for (int a = 0; a < T; ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(a, f);
            if (!g) continue;
            const int b = g->tet;
            const auto& pm = g->perm;
            fuf.unite(4 * a + f, 4 * b + g->face);
            for (int x = 0; x < 4; ++x) {
                if (x == f) continue;
                vuf.unite(4 * a + x, 4 * b + pm[x]);
                for (int y = x + 1; y < 4; ++y)
                    if (y != f) euf.unite(6 * a + edge_slot(x, y), 6 * b + edge_slot(pm[x], pm[y]));
                for (int y = 0; y < 4; ++y)
                    if (y != f && y != x) luf.unite(link_vertex(a, x, y), link_vertex(b, pm[x], pm[y]));
                leuf.unite(16 * a + 4 * x + f, 16 * b + 4 * pm[x] + g->face);
            }
        }
    int nv = 0, ne = 0, nf = 0;
    const auto vclass = vuf.classes(&nv);
    euf.classes(&ne);
    fuf.classes(&nf);
    r.vertices = nv;
    r.edges = ne;
    r.faces = nf;
    r.chi = nv - ne + nf - T;

    // A link triangle per corner; link edges are faces of the tetrahedron at that corner.
    std::vector<std::set<int>> lverts(nv);
    std::vector<std::set<int>> ledges(nv);
    std::vector<int> ltris(nv, 0);
    UnionFind corner_uf(4 * T);
    for (int a = 0; a < T; ++a)
        for (int x = 0; x < 4; ++x) {
            const int c = vclass[4 * a + x];
            ++ltris[c];
            std::vector<int> ends;
            for (int y = 0; y < 4; ++y)
                if (y != x) ends.push_back(luf.find(link_vertex(a, x, y)));
            for (int y : ends) lverts[c].insert(y);
            for (int f = 0; f < 4; ++f)
                if (f != x) ledges[c].insert(leuf.find(16 * a + 4 * x + f));
            for (int f = 0; f < 4; ++f) {
                if (f == x) continue;
                const auto& g = t.gluing(a, f);
                if (g) corner_uf.unite(4 * a + x, 4 * g->tet + g->perm[x]);
            }
        }
    std::vector<std::set<int>> components(nv);
    for (int a = 0; a < T; ++a)
        for (int x = 0; x < 4; ++x) components[vclass[4 * a + x]].insert(corner_uf.find(4 * a + x));
    for (int c = 0; c < nv; ++c) {
        VertexLink link;
        link.triangles = ltris[c];
        link.chi = static_cast<int>(lverts[c].size()) - static_cast<int>(ledges[c].size()) + ltris[c];
        link.connected = components[c].size() == 1;
        r.vertex_links.push_back(link);
    }

    bool links_ok = true;
    for (const auto& l : r.vertex_links) links_ok = links_ok && l.chi == 2 && l.connected;
    r.closed_manifold = T > 0 && r.all_faces_glued && r.involutive && r.chi == 0 && links_ok;
    return r;
}

CellComplex induced_complex(const Triangulation& t) {
    const int T = t.tet_count();
    for (int a = 0; a < T; ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(a, f);
            if (!g) throw std::invalid_argument("induced complex needs a closed triangulation");
            const auto& back = t.gluing(g->tet, g->face);
            if (!back || back->tet != a || back->face != f || back->perm != inverse(g->perm)) {
                throw std::invalid_argument("induced complex needs involutive gluings");
            }
        }

    UnionFind vuf(4 * T);
    // Oriented edge (a, x < y) relates to (b, pm[x], pm[y]) with a sign.
    std::vector<std::vector<std::pair<int, int>>> adj(6 * T);
    for (int a = 0; a < T; ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = *t.gluing(a, f);
            for (int x = 0; x < 4; ++x) {
                if (x == f) continue;
                vuf.unite(4 * a + x, 4 * g.tet + g.perm[x]);
                for (int y = x + 1; y < 4; ++y) {
                    if (y == f) continue;
                    const int X = g.perm[x], Y = g.perm[y];
                    adj[6 * a + edge_slot(x, y)].push_back({6 * g.tet + edge_slot(X, Y), X < Y ? 1 : -1});
                }
            }
        }
    int nv = 0;
    const auto vclass = vuf.classes(&nv);

    std::vector<int> eclass(6 * T, -1), esign(6 * T, 0), erep;
    for (int e = 0; e < 6 * T; ++e) {
        if (eclass[e] >= 0) continue;
        const int c = static_cast<int>(erep.size());
        erep.push_back(e);
        eclass[e] = c;
        esign[e] = 1;
        std::vector<int> stack{e};
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (auto [y, s] : adj[x]) {
                if (eclass[y] < 0) {
                    eclass[y] = c;
                    esign[y] = esign[x] * s;
                    stack.push_back(y);
                }
            }
        }
    }
    const int ne = static_cast<int>(erep.size());

    // Face classes: the smaller side of each pairing represents the 2-cell.
    std::map<std::pair<int, int>, int> fclass;
    std::vector<std::pair<int, int>> frep;
    for (int a = 0; a < T; ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = *t.gluing(a, f);
            if (std::pair{g.tet, g.face} < std::pair{a, f}) continue;
            fclass[{a, f}] = static_cast<int>(frep.size());
            frep.push_back({a, f});
        }
    const int nf = static_cast<int>(frep.size());

    CellComplex c;
    c.cells = {nv, ne, nf, T};
    c.boundary[0] = IntegerMatrix(nv, ne);
    c.boundary[1] = IntegerMatrix(ne, nf);
    c.boundary[2] = IntegerMatrix(nf, T);
    for (int k = 0; k < ne; ++k) {
        const int a = erep[k] / 6;
        const auto& xy = kEdgeVertices[erep[k] % 6];
        c.boundary[0].at(vclass[4 * a + xy[1]], k) += 1;
        c.boundary[0].at(vclass[4 * a + xy[0]], k) -= 1;
    }
    for (int k = 0; k < nf; ++k) {
        auto [a, f] = frep[k];
        std::vector<int> v;
        for (int x = 0; x < 4; ++x)
            if (x != f) v.push_back(x);
        // [v0 v1 v2] has boundary [v1 v2] - [v0 v2] + [v0 v1].
        const std::array<std::pair<std::array<int, 2>, int>, 3> terms = {
            {{{v[1], v[2]}, 1}, {{v[0], v[2]}, -1}, {{v[0], v[1]}, 1}}};
        for (const auto& [xy, s] : terms) {
            const int e = 6 * a + edge_slot(xy[0], xy[1]);
            c.boundary[1].at(eclass[e], k) += s * esign[e];
        }
    }
    for (int a = 0; a < T; ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = *t.gluing(a, f);
            const bool own = fclass.count({a, f}) > 0;
            const int k = own ? fclass.at({a, f}) : fclass.at({g.tet, g.face});
            int sign = f % 2 == 0 ? 1 : -1;
            if (!own) {
                // Compare our ordered face with the image of the representative's ordered face.
                std::vector<int> mine;
                for (int x = 0; x < 4; ++x)
                    if (x != f) mine.push_back(g.perm[x]);
                int inversions = 0;
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) inversions += mine[i] > mine[j] ? 1 : 0;
                if (inversions % 2) sign = -sign;
            }
            c.boundary[2].at(k, a) += sign;
        }
    return c;
}

void check_chain_complex(const CellComplex& c) {
    for (int d = 1; d <= 3; ++d) {
        const auto& m = c.boundary[d - 1];
        if (m.rows() != c.cells[d - 1] || m.cols() != c.cells[d]) {
            throw std::invalid_argument("boundary matrix " + std::to_string(d) + " has the wrong shape");
        }
    }
    for (int d = 1; d < 3; ++d) {
        if (!multiply(c.boundary[d - 1], c.boundary[d]).is_zero()) {
            throw std::invalid_argument("boundary maps do not compose to zero in degree " + std::to_string(d + 1));
        }
    }
}

HomologyResult homology(const CellComplex& c, int dim) {
    if (dim < 0 || dim > 3) throw std::invalid_argument("homology dimension must be 0..3");
    check_chain_complex(c);
    const int rank_out = dim == 0 ? 0 : rank_from_snf(smith_normal_form(c.boundary[dim - 1]));
    HomologyResult h;
    int rank_in = 0;
    if (dim < 3) {
        const auto diag = smith_normal_form(c.boundary[dim]);
        rank_in = rank_from_snf(diag);
        for (const auto& d : diag)
            if (d > 1) h.torsion.push_back(d);
    }
    h.free_rank = c.cells[dim] - rank_out - rank_in;
    return h;
}

HomologyResult cokernel(const IntegerMatrix& relations) {
    const auto diag = smith_normal_form(relations);
    HomologyResult h;
    h.free_rank = relations.cols() - rank_from_snf(diag);
    for (const auto& d : diag)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

}  // namespace bridgecover
