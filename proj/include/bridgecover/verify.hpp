// Combinatorial manifold checks and integral homology.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "bridgecover/snf.hpp"
#include "bridgecover/triangulation.hpp"

namespace bridgecover {

struct CellComplex {
    std::array<int, 4> cells{};
    // boundary[d - 1] is the map from d-cells to (d-1)-cells: rows cells[d-1], cols cells[d].
    std::array<IntegerMatrix, 3> boundary;

    int euler_characteristic() const { return cells[0] - cells[1] + cells[2] - cells[3]; }
};

struct HomologyResult {
    int free_rank = 0;
    std::vector<Integer> torsion;  // each entry >= 2, d_1 | d_2 | ...

    bool operator==(const HomologyResult&) const = default;
    /// "0", "Z", "Z/4 + Z/4", "Z^2 + Z/3", ...
    std::string str() const;
};

struct VertexLink {
    int chi = 0;
    bool connected = false;
    int triangles = 0;
};

struct ValidationReport {
    int tet_count = 0;
    int free_faces = 0;
    bool all_faces_glued = false;
    bool involutive = false;
    bool orientable = false;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int chi = 0;
    std::vector<VertexLink> vertex_links;
    bool closed_manifold = false;
};

ValidationReport validate_triangulation(const Triangulation& t);

/// Cellular chain complex of a closed triangulation: identified vertices,
/// edges and faces plus one 3-cell per tetrahedron. Throws
/// std::invalid_argument when a face is free or a gluing is not involutive.
CellComplex induced_complex(const Triangulation& t);

/// Throws std::invalid_argument on mismatched dimensions or a nonzero
/// composite boundary.
void check_chain_complex(const CellComplex& c);

/// H_dim for dim in 0..3.
HomologyResult homology(const CellComplex& c, int dim);

/// Quotient of Z^generators by the row span of `relations`.
HomologyResult cokernel(const IntegerMatrix& relations);

}  // namespace bridgecover
