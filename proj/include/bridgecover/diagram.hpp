// Conway normal form of K(p,q), its twist structure and region graph.
//
// The diagram is a 4-plat drawn on four horizontal strand levels 0..3
// (bottom to top). Block j of the expansion contributes a_j crossings: odd
// blocks twist levels 1 and 2, even blocks twist levels 0 and 1; level 3
// never crosses. On the left, caps join levels 0-1 and 2-3. On the right the
// caps are 0-1 and 2-3 for odd k, and 1-2 plus an outer arc 0-3 for even k.
//
// Each crossing has four ports (west/east by low/high level) and four
// corners (north, west, south, east). Faces are traced from the rotation
// system (east-high, west-high, west-low, east-low) counterclockwise.
//
// Region labels R_0..R_{k+1}:
//   R_0      the face north of block 1 (between levels 2 and 3),
//   R_1      the face south of block 2 (below level 0, the outer face);
//            for k = 1 the outer face west of the first crossing,
//   R_{b+1}  the face across block b from R_0 (b odd) or R_1 (b even).
//
// Region graph rule, reproduced by tracing for every parity of k: block b
// gives an a_b-fold connection between R_{b+1} and R_0 (b odd) or R_1
// (b even), and a single connection R_b - R_{b+2} whenever a_b = 1 with
// 2 <= b <= k-1.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bridgecover/arith.hpp"

namespace bridgecover {

enum class TwistPair { Middle, Lower };
enum class Side { North = 0, West = 1, South = 2, East = 3 };
enum class Port { EastHigh = 0, WestHigh = 1, WestLow = 2, EastLow = 3 };

const char* to_string(TwistPair pair);

struct Crossing {
    int block = 0;     // 1-based block index j
    int position = 0;  // 0-based index inside the block
    TwistPair pair = TwistPair::Middle;
};

struct Corner {
    int crossing = 0;
    Side side = Side::North;
};

struct Region {
    std::vector<Corner> corners;
    std::optional<int> label;  // j for R_j
};

struct PortRef {
    int crossing = 0;
    Port port = Port::EastHigh;

    bool operator==(const PortRef&) const = default;
};

class ConwayDiagram {
public:
    explicit ConwayDiagram(std::vector<int> coefficients);

    const std::vector<int>& coefficients() const { return coefficients_; }
    int block_count() const { return static_cast<int>(coefficients_.size()); }
    int parity() const { return block_count() % 2; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Region>& regions() const { return regions_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }

    int region_at(int crossing, Side side) const { return corner_region_[crossing][static_cast<int>(side)]; }
    PortRef partner(PortRef port) const { return partner_[port.crossing][static_cast<int>(port.port)]; }

    /// Region index carrying label R_j.
    int labeled_region(int j) const { return labeled_[j]; }

    /// Faces with exactly two corners.
    int bigon_count() const;
    int component_count() const;
    bool is_alternating() const;

    /// Whether the strand from west-low to east-high passes over.
    bool rising_strand_over(int crossing) const;

private:
    void connect_ports();
    void trace_faces();
    void assign_labels();

    std::vector<int> coefficients_;
    std::vector<Crossing> crossings_;
    std::vector<std::array<PortRef, 4>> partner_;
    std::vector<std::array<int, 4>> corner_region_;
    std::vector<Region> regions_;
    std::vector<int> labeled_;
};

struct RegionGraph {
    int vertex_count = 0;
    std::map<std::pair<int, int>, int> edges;  // (i, j) with i < j -> multiplicity

    int multiplicity(int i, int j) const;
    int total_multiplicity() const;
    bool operator==(const RegionGraph&) const = default;
};

/// Throws std::invalid_argument for a non-minimized expansion.
ConwayDiagram build_conway(const ContinuedFraction& cf);

/// Counts classes of crossings linked through chains of two-cornered faces.
int twist_number(const ConwayDiagram& d);

/// Graph on R_0..R_{k+1}, one edge per passage through a crossing between
/// opposite labeled regions. Throws std::invalid_argument when a_1 = 1.
RegionGraph region_graph(const ConwayDiagram& d);

/// The closed-form connection rule documented above.
RegionGraph region_graph_rule(const std::vector<int>& coefficients);

/// Alternating, no nugatory crossing, and every pair of faces met by a curve
/// through two or more crossings only through crossings of a single twist.
/// Throws std::invalid_argument when a_1 = 1.
bool is_twist_reduced(const ConwayDiagram& d);

/// Text dump: a header `conway a1 a2 ...` then `<block> <index> <middle|lower>`
/// for each crossing in drawing order.
std::string dump_crossings(const ConwayDiagram& d);

struct TwistAnalysis {
    ContinuedFraction analyzed;  // expansion actually used for region analysis
    bool mirrored = false;       // a_1 = 1 was replaced by the K(p, p-q) expansion
    int twist_number = 0;
    bool twist_reduced = false;
    RegionGraph graph;
};

/// Twist data for a slope; a_1 = 1 expansions are switched to the partner
/// expansion of p/(p-q) before region analysis.
TwistAnalysis analyze_twists(const SlopePair& s);

}  // namespace bridgecover
