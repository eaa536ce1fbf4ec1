// Minkus polyhedral scheme for the meridian-cyclic covering M_{n,m}(p,q)
// and its subdivision into n(p-1) tetrahedra.
//
// The boundary sphere of the ball carries n great semicircles C_0..C_{n-1}
// from N to S, each cut into p segments. Vertex (i, j) sits j segments down
// C_i. Lune L_i between C_i and C_{i+1} is split by an arc A_i from
// P_i = (i, q) to (i+1, p-q) into R_i (containing N) and a region R'
// (containing S). Every region is a (p+1)-gon listed counterclockwise from
// outside the ball: R_i from N, R' regions from their marked vertex.
//
// The pairing phi_i : R_i -> R'_i reverses orientation and matches P_i with
// P_{i-w}, where w = pairing_winding(). R'_i is the lower half of lune
// L_{i-w}.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "bridgecover/arith.hpp"
#include "bridgecover/triangulation.hpp"

namespace bridgecover {

struct SchemeRegion {
    std::vector<int> vertices;  // p+1 sphere vertices, counterclockwise
    std::vector<int> edges;     // edges[k] joins vertices[k] and vertices[k+1]
    int marked = 0;             // position of the marked vertex P
};

struct SchemePairing {
    int region = 0;               // R_region -> R'_region
    std::vector<int> vertex_map;  // position in R_i -> position in R'_i
    std::vector<int> edge_map;
};

struct SphereTriangle {
    bool primed = false;
    int region = 0;
    int index = 0;                   // fan index t in 1..p-1
    std::array<int, 3> vertices{};   // (N, v_t, v_{t+1}) or its image
    std::array<int, 3> edges{};      // edges[k] is opposite vertices[k]
};

struct CellComplex;

class MinkusScheme {
public:
    const SlopePair& slope() const { return slope_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int winding() const { return winding_; }

    int vertex_count() const { return 2 + n_ * (p_ - 1); }
    /// Semicircle segments and arcs before subdivision.
    int edge_count() const { return n_ * (p_ + 1); }
    /// Sphere vertex id; depth 0 is N and depth p is S.
    int vertex(int semicircle, int depth) const;
    std::string vertex_name(int v) const;

    const std::array<int, 2>& edge_ends(int e) const { return ends_.at(e); }

    const SchemeRegion& region(int i) const { return regions_.at(i); }
    const SchemeRegion& primed_region(int i) const { return primed_.at(i); }
    const SchemePairing& pairing(int i) const { return pairings_.at(i); }

    /// Fan triangles: R triangles first (index i(p-1) + t-1), then their images.
    const std::vector<SphereTriangle>& triangles() const { return triangles_; }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }
    /// Every subdivided edge (scheme edges then diagonals) with its endpoints.
    int subdivided_edge_count() const { return static_cast<int>(ends_.size()); }

private:
    friend MinkusScheme build_scheme(const SlopePair&, int, int);
    void build_regions();
    void build_triangles();

    SlopePair slope_{2, 1};
    int p_ = 2, q_ = 1, n_ = 2, m_ = 1, winding_ = 1;
    std::vector<std::array<int, 2>> ends_;
    std::vector<SchemeRegion> regions_;
    std::vector<SchemeRegion> primed_;
    std::vector<SchemePairing> pairings_;
    std::vector<SphereTriangle> triangles_;
};

/// Returns an empty string when (n, m) is admissible for the slope.
std::string scheme_parameter_error(const SlopePair& s, int n, int m);

/// The anchor shift w used by the pairing. Even p uses w = m. Odd p uses
/// w = 1, except that odd p with even q needs the mirrored winding w = -1:
/// with w = 1 those quotients fail to be manifolds once n >= 3.
int pairing_winding(const SlopePair& s, int m);

/// Throws std::invalid_argument for n < 2 or an inadmissible m.
MinkusScheme build_scheme(const SlopePair& s, int n, int m);

/// Cones from N over the primed-region triangles, glued into a closed
/// triangulation with n(p-1) tetrahedra. Throws std::logic_error on an
/// internal inconsistency.
Triangulation triangulate(const MinkusScheme& sch);

struct QuotientSkeleton {
    std::vector<int> vertex_class;          // sphere vertex -> class
    std::vector<int> edge_class;            // subdivided edge -> class
    std::vector<int> edge_sign;             // orientation relative to the class
    std::vector<int> class_representative;  // class -> first subdivided edge
    int vertex_classes = 0;
    int edge_classes = 0;
};

/// Identification classes of vertices and oriented edges under the pairings.
QuotientSkeleton quotient_skeleton(const MinkusScheme& sch);

/// One 3-cell, n(p-1) triangular 2-cells (oriented as the R triangles), and
/// the identified edges and vertices.
CellComplex quotient_complex(const MinkusScheme& sch);

/// +1 when the vertices of tri appear counterclockwise in their region.
int triangle_orientation(const MinkusScheme& sch, const SphereTriangle& tri);

}  // namespace bridgecover
