#include "bridgecover/minkus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bridgecover/verify.hpp"

namespace bridgecover {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int position_in(const std::array<int, 3>& vertices, int v) {
    for (int k = 0; k < 3; ++k)
        if (vertices[k] == v) return k;
    throw std::logic_error("vertex missing from adjacent triangle");
}

int position_in(const std::vector<int>& vertices, int v) {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) throw std::logic_error("vertex missing from region");
    return static_cast<int>(it - vertices.begin());
}

}  // namespace

std::string scheme_parameter_error(const SlopePair& s, int n, int m) {
    if (n < 2) return "covering order n must be at least 2";
    if (!s.p().fits_sint_p() || s.p() > 100000) return "p too large for an explicit scheme";
    const bool odd = mpz_odd_p(s.p().get_mpz_t()) != 0;
    if (odd) {
        if (m != 1) return "m must be 1 when p is odd (K(p,q) is a knot)";
    } else if (m < 1 || m >= n || std::gcd(m, n) != 1) {
        return "for even p, m must satisfy 1 <= m < n and gcd(m, n) = 1";
    }
    return {};
}

int pairing_winding(const SlopePair& s, int m) {
    const bool p_odd = mpz_odd_p(s.p().get_mpz_t()) != 0;
    const bool q_even = mpz_even_p(s.q().get_mpz_t()) != 0;
    if (p_odd && q_even) return -1;
    return p_odd ? 1 : m;
}

int MinkusScheme::vertex(int semicircle, int depth) const {
    if (depth == 0) return 0;
    if (depth == p_) return 1;
    return 2 + mod(semicircle, n_) * (p_ - 1) + (depth - 1);
}

std::string MinkusScheme::vertex_name(int v) const {
    if (v == 0) return "N";
    if (v == 1) return "S";
    const int i = (v - 2) / (p_ - 1), j = (v - 2) % (p_ - 1) + 1;
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

MinkusScheme build_scheme(const SlopePair& s, int n, int m) {
    if (auto err = scheme_parameter_error(s, n, m); !err.empty()) throw std::invalid_argument(err);
    MinkusScheme sch;
    sch.slope_ = s;
    sch.p_ = to_int(s.p());
    sch.q_ = to_int(s.q());
    sch.n_ = n;
    sch.m_ = m;
    sch.winding_ = pairing_winding(s, m);
    sch.build_regions();
    sch.build_triangles();
    return sch;
}

void MinkusScheme::build_regions() {
    const int p = p_, q = q_, n = n_, L = p + 1;
    auto seg = [&](int i, int j) { return mod(i, n) * p + j; };
    auto arc = [&](int i) { return n * p + mod(i, n); };

    ends_.assign(n * (p + 1), {0, 0});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) ends_[seg(i, j)] = {vertex(i, j), vertex(i, j + 1)};
        ends_[arc(i)] = {vertex(i, q), vertex(i + 1, p - q)};
    }

    regions_.assign(n, {});
    primed_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        auto& r = regions_[i];
        r.vertices.push_back(vertex(i, 0));
        for (int j = 1; j <= q; ++j) r.vertices.push_back(vertex(i, j));
        for (int j = p - q; j >= 1; --j) r.vertices.push_back(vertex(i + 1, j));
        for (int j = 0; j < q; ++j) r.edges.push_back(seg(i, j));
        r.edges.push_back(arc(i));
        for (int j = p - q - 1; j >= 0; --j) r.edges.push_back(seg(i + 1, j));
        r.marked = q;
    }
    // The lower half of lune j is R'_{j+w}, listed from its marked vertex (j, q).
    for (int j = 0; j < n; ++j) {
        auto& r = primed_[mod(j + winding_, n)];
        for (int d = q; d <= p; ++d) r.vertices.push_back(vertex(j, d));
        for (int d = p - 1; d >= p - q; --d) r.vertices.push_back(vertex(j + 1, d));
        for (int d = q; d < p; ++d) r.edges.push_back(seg(j, d));
        for (int d = p - 1; d >= p - q; --d) r.edges.push_back(seg(j + 1, d));
        r.edges.push_back(arc(j));
        r.marked = 0;
    }

    pairings_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        auto& ph = pairings_[i];
        ph.region = i;
        ph.vertex_map.resize(L);
        ph.edge_map.resize(L);
        // Orientation reversing, anchored at the marked vertices.
        for (int a = 0; a < L; ++a) ph.vertex_map[a] = mod(q - a, L);
        for (int a = 0; a < L; ++a) ph.edge_map[a] = mod(ph.vertex_map[a] - 1, L);
    }
}

void MinkusScheme::build_triangles() {
    const int p = p_, n = n_;
    const int fan = p - 1;
    const int diag_base = n * (p + 1);
    const int primed_diag_base = diag_base + n * std::max(p - 2, 0);
    ends_.resize(primed_diag_base + n * std::max(p - 2, 0));

    triangles_.assign(2 * n * fan, {});
    for (int i = 0; i < n; ++i) {
        const auto& r = regions_[i];
        const auto& rp = primed_[i];
        const auto& ph = pairings_[i];
        auto diag = [&](int t) {
            if (t == 1) return r.edges[0];
            if (t == p) return r.edges[p];
            return diag_base + i * (p - 2) + (t - 2);
        };
        auto diag_primed = [&](int t) {
            if (t == 1) return rp.edges[ph.edge_map[0]];
            if (t == p) return rp.edges[ph.edge_map[p]];
            return primed_diag_base + i * (p - 2) + (t - 2);
        };
        for (int t = 2; t < p; ++t) {
            ends_[diag(t)] = {r.vertices[0], r.vertices[t]};
            ends_[diag_primed(t)] = {rp.vertices[ph.vertex_map[0]], rp.vertices[ph.vertex_map[t]]};
        }
        for (int t = 1; t < p; ++t) {
            auto& tri = triangles_[i * fan + t - 1];
            tri = {false, i, t, {r.vertices[0], r.vertices[t], r.vertices[t + 1]},
                   {r.edges[t], diag(t + 1), diag(t)}};
            auto& img = triangles_[n * fan + i * fan + t - 1];
            img = {true, i, t,
                   {rp.vertices[ph.vertex_map[0]], rp.vertices[ph.vertex_map[t]], rp.vertices[ph.vertex_map[t + 1]]},
                   {rp.edges[ph.edge_map[t]], diag_primed(t + 1), diag_primed(t)}};
        }
    }
}

int triangle_orientation(const MinkusScheme& sch, const SphereTriangle& tri) {
    const auto& region = tri.primed ? sch.primed_region(tri.region) : sch.region(tri.region);
    const int L = static_cast<int>(region.vertices.size());
    const int a = position_in(region.vertices, tri.vertices[0]);
    const int b = position_in(region.vertices, tri.vertices[1]);
    const int c = position_in(region.vertices, tri.vertices[2]);
    return mod(b - a, L) < mod(c - a, L) ? 1 : -1;
}

namespace {

struct EdgeSide {
    int triangle;
    int slot;
};

std::vector<std::vector<EdgeSide>> edge_sides(const MinkusScheme& sch) {
    std::vector<std::vector<EdgeSide>> sides(sch.subdivided_edge_count());
    for (int t = 0; t < sch.triangle_count(); ++t)
        for (int k = 0; k < 3; ++k) sides[sch.triangles()[t].edges[k]].push_back({t, k});
    for (const auto& s : sides)
        if (s.size() != 2) throw std::logic_error("subdivided scheme edge is not shared by exactly two triangles");
    return sides;
}

EdgeSide across(const std::vector<std::vector<EdgeSide>>& sides, int edge, int triangle) {
    const auto& s = sides[edge];
    return s[0].triangle == triangle ? s[1] : s[0];
}

// +1 when the triangle boundary runs along the edge's stored direction.
int traversal_sign(const MinkusScheme& sch, const SphereTriangle& tri, int k) {
    const auto& e = sch.edge_ends(tri.edges[k]);
    const int a = tri.vertices[(k + 1) % 3], b = tri.vertices[(k + 2) % 3];
    if (e[0] == a && e[1] == b) return 1;
    if (e[0] == b && e[1] == a) return -1;
    throw std::logic_error("triangle edge endpoints disagree with the scheme");
}

}  // namespace

Triangulation triangulate(const MinkusScheme& sch) {
    const int tets = sch.n() * (sch.p() - 1);
    const auto sides = edge_sides(sch);
    const auto& tris = sch.triangles();
    Triangulation tri(tets);

    // Tetrahedron T is the cone from N over primed triangle tets + T: vertex 0
    // is the apex and vertex k+1 is the triangle's vertex k.
    for (int T = 0; T < tets; ++T) {
        const auto& base = tris[tets + T];
        for (int k = 0; k < 3; ++k) {
            const auto other = across(sides, base.edges[k], tets + T);
            const auto& ot = tris[other.triangle];
            Perm4 perm{};
            if (ot.primed) {
                // Neighbouring cones share the lateral face over the edge.
                perm[0] = 0;
                perm[k + 1] = other.slot + 1;
                for (int j = 0; j < 3; ++j)
                    if (j != k) perm[j + 1] = position_in(ot.vertices, base.vertices[j]) + 1;
                tri.set_gluing(T, k + 1, {other.triangle - tets, other.slot + 1, perm});
            } else {
                // The lateral face is the R triangle itself, identified with the base of its image.
                if (other.slot != 0) throw std::logic_error("lateral edge is not opposite N");
                perm[k + 1] = 0;
                perm[0] = 1;
                for (int j = 0; j < 3; ++j)
                    if (j != k) perm[j + 1] = position_in(ot.vertices, base.vertices[j]) + 1;
                tri.set_gluing(T, k + 1, {other.triangle, 0, perm});
            }
        }
        // The base is phi(tau); tau is the cone over its edge opposite N.
        const auto& tau = tris[T];
        const auto other = across(sides, tau.edges[0], T);
        const auto& ot = tris[other.triangle];
        Perm4 perm{};
        if (ot.primed) {
            perm[0] = other.slot + 1;
            perm[1] = 0;
            for (int j = 1; j < 3; ++j) perm[j + 1] = position_in(ot.vertices, tau.vertices[j]) + 1;
            tri.set_gluing(T, 0, {other.triangle - tets, other.slot + 1, perm});
        } else {
            // Folded pair: two R triangles on one segment, so the bases meet directly.
            if (other.slot != 0) throw std::logic_error("folded edge is not opposite N");
            perm[0] = 0;
            perm[1] = 1;
            for (int j = 1; j < 3; ++j) perm[j + 1] = position_in(ot.vertices, tau.vertices[j]) + 1;
            tri.set_gluing(T, 0, {other.triangle, 0, perm});
        }
    }
    if (tri.free_face_count() != 0) throw std::logic_error("Minkus triangulation left a face unglued");
    for (int a = 0; a < tets; ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = *tri.gluing(a, f);
            const auto& back = tri.gluing(g.tet, g.face);
            if (!back || back->tet != a || back->face != f || back->perm != inverse(g.perm) || g.perm[f] != g.face) {
                throw std::logic_error("Minkus triangulation gluing is not an involution");
            }
        }
    return tri;
}

QuotientSkeleton quotient_skeleton(const MinkusScheme& sch) {
    const int fan_total = sch.n() * (sch.p() - 1);
    const auto& tris = sch.triangles();
    QuotientSkeleton q;

    std::vector<int> parent(sch.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<std::pair<int, int>>> adj(sch.subdivided_edge_count());
    for (int f = 0; f < fan_total; ++f) {
        const auto& a = tris[f];
        const auto& b = tris[fan_total + f];
        for (int k = 0; k < 3; ++k) {
            parent[find(a.vertices[k])] = find(b.vertices[k]);
            const int s = traversal_sign(sch, a, k) * traversal_sign(sch, b, k);
            adj[a.edges[k]].push_back({b.edges[k], s});
            adj[b.edges[k]].push_back({a.edges[k], s});
        }
    }

    q.vertex_class.assign(sch.vertex_count(), -1);
    std::vector<int> root_class(sch.vertex_count(), -1);
    for (int v = 0; v < sch.vertex_count(); ++v) {
        int& c = root_class[find(v)];
        if (c < 0) c = q.vertex_classes++;
        q.vertex_class[v] = c;
    }

    q.edge_class.assign(sch.subdivided_edge_count(), -1);
    q.edge_sign.assign(sch.subdivided_edge_count(), 0);
    for (int e = 0; e < sch.subdivided_edge_count(); ++e) {
        if (q.edge_class[e] >= 0) continue;
        const int c = q.edge_classes++;
        q.class_representative.push_back(e);
        q.edge_class[e] = c;
        q.edge_sign[e] = 1;
        std::vector<int> stack{e};
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (auto [y, s] : adj[x]) {
                const int want = q.edge_sign[x] * s;
                if (q.edge_class[y] < 0) {
                    q.edge_class[y] = c;
                    q.edge_sign[y] = want;
                    stack.push_back(y);
                } else if (q.edge_sign[y] != want) {
                    throw std::logic_error("edge identifications reverse an edge onto itself");
                }
            }
        }
    }
    return q;
}

CellComplex quotient_complex(const MinkusScheme& sch) {
    const int faces = sch.n() * (sch.p() - 1);
    const auto q = quotient_skeleton(sch);
    const auto& tris = sch.triangles();
    CellComplex c;
    c.cells = {q.vertex_classes, q.edge_classes, faces, 1};
    c.boundary[0] = IntegerMatrix(q.vertex_classes, q.edge_classes);
    c.boundary[1] = IntegerMatrix(q.edge_classes, faces);
    c.boundary[2] = IntegerMatrix(faces, 1);
    for (int k = 0; k < q.edge_classes; ++k) {
        const auto& e = sch.edge_ends(q.class_representative[k]);
        c.boundary[0].at(q.vertex_class[e[1]], k) += 1;
        c.boundary[0].at(q.vertex_class[e[0]], k) -= 1;
    }
    for (int f = 0; f < faces; ++f)
        for (int k = 0; k < 3; ++k) {
            const int e = tris[f].edges[k];
            c.boundary[1].at(q.edge_class[e], f) += traversal_sign(sch, tris[f], k) * q.edge_sign[e];
        }
    // Each 2-cell bounds the ball twice, once as tau and once as phi(tau).
    for (int t = 0; t < sch.triangle_count(); ++t) c.boundary[2].at(t % faces, 0) += triangle_orientation(sch, tris[t]);
    return c;
}

}  // namespace bridgecover
