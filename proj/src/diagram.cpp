#include "bridgecover/diagram.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bridgecover {

const char* to_string(TwistPair pair) { return pair == TwistPair::Middle ? "middle" : "lower"; }

namespace {

constexpr long kMaxCrossings = 1'000'000;

// Counterclockwise rotation at a crossing, starting north-east.
constexpr std::array<Port, 4> kRotation = {Port::EastHigh, Port::WestHigh, Port::WestLow, Port::EastLow};

// Corner between a port and its counterclockwise successor.
constexpr std::array<Side, 4> kCornerAfter = {Side::North, Side::West, Side::South, Side::East};

Port through_port(Port port) {
    switch (port) {
        case Port::WestLow: return Port::EastHigh;
        case Port::EastHigh: return Port::WestLow;
        case Port::WestHigh: return Port::EastLow;
        case Port::EastLow: return Port::WestHigh;
    }
    return port;
}

bool on_rising_strand(Port port) { return port == Port::WestLow || port == Port::EastHigh; }

struct UnionFind {
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

}  // namespace

ConwayDiagram::ConwayDiagram(std::vector<int> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("Conway diagram needs at least one block");
    long total = 0;
    for (int a : coefficients_) {
        if (a <= 0) throw std::invalid_argument("Conway diagram blocks must be positive");
        total += a;
        if (total > kMaxCrossings) throw std::invalid_argument("Conway diagram too large");
    }
    for (int b = 1; b <= block_count(); ++b) {
        const TwistPair pair = b % 2 == 1 ? TwistPair::Middle : TwistPair::Lower;
        for (int i = 0; i < coefficients_[b - 1]; ++i) crossings_.push_back({b, i, pair});
    }
    connect_ports();
    trace_faces();
    assign_labels();
}

void ConwayDiagram::connect_ports() {
    const int ports = 4 * crossing_count();
    const int left = ports, right = ports + 4;
    std::vector<std::vector<int>> adj(ports + 8);
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    auto port_id = [](int c, Port p) { return 4 * c + static_cast<int>(p); };

    link(left + 0, left + 1);
    link(left + 2, left + 3);
    std::array<int, 4> open = {left + 0, left + 1, left + 2, left + 3};
    for (int c = 0; c < crossing_count(); ++c) {
        const int low = crossings_[c].pair == TwistPair::Middle ? 1 : 0;
        link(open[low], port_id(c, Port::WestLow));
        link(open[low + 1], port_id(c, Port::WestHigh));
        open[low] = port_id(c, Port::EastLow);
        open[low + 1] = port_id(c, Port::EastHigh);
    }
    for (int level = 0; level < 4; ++level) link(open[level], right + level);
    if (block_count() % 2 == 1) {
        link(right + 0, right + 1);
        link(right + 2, right + 3);
    } else {
        link(right + 1, right + 2);
        link(right + 0, right + 3);
    }

    partner_.assign(crossing_count(), {});
    for (int x = 0; x < ports; ++x) {
        int prev = x, cur = adj[x].front();
        for (int steps = 0; cur >= ports; ++steps) {
            if (steps > 8) throw std::logic_error("Conway closure contains a crossingless loop");
            const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        partner_[x / 4][x % 4] = PortRef{cur / 4, static_cast<Port>(cur % 4)};
    }
}

void ConwayDiagram::trace_faces() {
    corner_region_.assign(crossing_count(), {-1, -1, -1, -1});
    std::vector<std::array<bool, 4>> used(crossing_count(), {false, false, false, false});
    for (int c = 0; c < crossing_count(); ++c) {
        for (int s = 0; s < 4; ++s) {
            if (used[c][s]) continue;
            Region region;
            const int id = static_cast<int>(regions_.size());
            // Corner s is entered through port s, so the walk leaves through port s+1.
            PortRef leave{c, kRotation[(s + 1) % 4]};
            while (true) {
                const PortRef arrive = partner(leave);
                const int idx = static_cast<int>(arrive.port);
                int rot = 0;
                while (kRotation[rot] != static_cast<Port>(idx)) ++rot;
                const Side side = kCornerAfter[rot];
                auto& flag = used[arrive.crossing][static_cast<int>(side)];
                if (flag) break;
                flag = true;
                corner_region_[arrive.crossing][static_cast<int>(side)] = id;
                region.corners.push_back({arrive.crossing, side});
                leave = PortRef{arrive.crossing, kRotation[(rot + 1) % 4]};
            }
            regions_.push_back(std::move(region));
        }
    }
    // A connected planar 4-valent graph has C + 2 faces.
    if (static_cast<int>(regions_.size()) != crossing_count() + 2) {
        throw std::logic_error("Conway diagram face count violates the Euler relation");
    }
}

void ConwayDiagram::assign_labels() {
    const int k = block_count();
    labeled_.assign(k + 2, -1);
    std::vector<int> first(k + 1, -1);
    for (int c = crossing_count() - 1; c >= 0; --c) first[crossings_[c].block] = c;

    labeled_[0] = region_at(first[1], Side::North);
    labeled_[1] = k >= 2 ? region_at(first[2], Side::South) : region_at(first[1], Side::West);
    for (int b = 1; b <= k; ++b) {
        labeled_[b + 1] = region_at(first[b], b % 2 == 1 ? Side::South : Side::North);
    }
    std::set<int> distinct(labeled_.begin(), labeled_.end());
    if (static_cast<int>(distinct.size()) != k + 2) {
        throw std::logic_error("Conway diagram region labels collide");
    }
    for (int j = 0; j < k + 2; ++j) regions_[labeled_[j]].label = j;
}

int ConwayDiagram::bigon_count() const {
    int count = 0;
    for (const auto& r : regions_) count += r.corners.size() == 2 ? 1 : 0;
    return count;
}

bool ConwayDiagram::rising_strand_over(int crossing) const {
    return crossings_[crossing].pair == TwistPair::Middle;
}

namespace {

// Walks every strand component, reporting the over/under sequence of each.
std::vector<std::vector<bool>> strand_components(const ConwayDiagram& d) {
    std::vector<std::array<bool, 4>> seen(d.crossing_count(), {false, false, false, false});
    std::vector<std::vector<bool>> components;
    for (int c = 0; c < d.crossing_count(); ++c) {
        for (int p = 0; p < 4; ++p) {
            if (seen[c][p]) continue;
            std::vector<bool> overs;
            PortRef enter{c, static_cast<Port>(p)};
            while (!seen[enter.crossing][static_cast<int>(enter.port)]) {
                const PortRef exit{enter.crossing, through_port(enter.port)};
                seen[enter.crossing][static_cast<int>(enter.port)] = true;
                seen[exit.crossing][static_cast<int>(exit.port)] = true;
                const bool rising = on_rising_strand(enter.port);
                overs.push_back(rising == d.rising_strand_over(enter.crossing));
                enter = d.partner(exit);
            }
            components.push_back(std::move(overs));
        }
    }
    return components;
}

}  // namespace

int ConwayDiagram::component_count() const { return static_cast<int>(strand_components(*this).size()); }

bool ConwayDiagram::is_alternating() const {
    for (const auto& overs : strand_components(*this)) {
        if (overs.size() % 2 != 0) return false;
        for (std::size_t i = 0; i < overs.size(); ++i) {
            if (overs[i] == overs[(i + 1) % overs.size()]) return false;
        }
    }
    return true;
}

int RegionGraph::multiplicity(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = edges.find({i, j});
    return it == edges.end() ? 0 : it->second;
}

int RegionGraph::total_multiplicity() const {
    int total = 0;
    for (const auto& [key, mult] : edges) total += mult;
    return total;
}

ConwayDiagram build_conway(const ContinuedFraction& cf) {
    if (!cf.minimized()) throw std::invalid_argument("Conway normal form needs a minimized expansion");
    std::vector<int> a;
    a.reserve(cf.length());
    for (const auto& x : cf.coefficients()) a.push_back(to_int(x));
    return ConwayDiagram(std::move(a));
}

namespace {

UnionFind twist_classes(const ConwayDiagram& d) {
    UnionFind uf(d.crossing_count());
    for (const auto& region : d.regions()) {
        if (region.corners.size() == 2) uf.unite(region.corners[0].crossing, region.corners[1].crossing);
    }
    return uf;
}

void require_leading_block(const ConwayDiagram& d) {
    if (d.coefficients().front() == 1) {
        throw std::invalid_argument(
            "region analysis needs a_1 > 1; use the partner expansion of K(p, p-q) (a_2 + 1, a_3, ...)");
    }
}

}  // namespace

int twist_number(const ConwayDiagram& d) {
    auto uf = twist_classes(d);
    std::set<int> roots;
    for (int c = 0; c < d.crossing_count(); ++c) roots.insert(uf.find(c));
    return static_cast<int>(roots.size());
}

RegionGraph region_graph(const ConwayDiagram& d) {
    require_leading_block(d);
    RegionGraph g;
    g.vertex_count = d.block_count() + 2;
    for (int c = 0; c < d.crossing_count(); ++c) {
        for (auto [s1, s2] : {std::pair{Side::North, Side::South}, std::pair{Side::West, Side::East}}) {
            const auto& a = d.regions()[d.region_at(c, s1)].label;
            const auto& b = d.regions()[d.region_at(c, s2)].label;
            if (!a || !b) continue;
            ++g.edges[{std::min(*a, *b), std::max(*a, *b)}];
        }
    }
    return g;
}

RegionGraph region_graph_rule(const std::vector<int>& a) {
    const int k = static_cast<int>(a.size());
    RegionGraph g;
    g.vertex_count = k + 2;
    for (int b = 1; b <= k; ++b) {
        const int hub = b % 2 == 1 ? 0 : 1;
        g.edges[{hub, b + 1}] += a[b - 1];
        if (a[b - 1] == 1 && b >= 2 && b <= k - 1) g.edges[{b, b + 2}] += 1;
    }
    return g;
}

bool is_twist_reduced(const ConwayDiagram& d) {
    require_leading_block(d);
    if (!d.is_alternating()) return false;
    auto uf = twist_classes(d);
    std::map<std::pair<int, int>, std::vector<int>> passages;
    for (int c = 0; c < d.crossing_count(); ++c) {
        for (auto [s1, s2] : {std::pair{Side::North, Side::South}, std::pair{Side::West, Side::East}}) {
            const int x = d.region_at(c, s1), y = d.region_at(c, s2);
            if (x == y) return false;  // nugatory crossing
            passages[{std::min(x, y), std::max(x, y)}].push_back(c);
        }
    }
    for (const auto& [pair, through] : passages) {
        for (int c : through) {
            if (uf.find(c) != uf.find(through.front())) return false;
        }
    }
    return true;
}

std::string dump_crossings(const ConwayDiagram& d) {
    std::ostringstream os;
    os << "conway";
    for (int a : d.coefficients()) os << ' ' << a;
    os << '\n';
    for (const auto& c : d.crossings()) os << c.block << ' ' << c.position << ' ' << to_string(c.pair) << '\n';
    return os.str();
}

TwistAnalysis analyze_twists(const SlopePair& s) {
    auto cf = minimized_expansion(s);
    const auto diagram = build_conway(cf);
    const int twists = twist_number(diagram);
    bool mirrored = false;
    if (cf.coefficients().front() == 1) {
        cf = flip_expansion(cf);
        mirrored = true;
    }
    const auto analyzed = mirrored ? build_conway(cf) : diagram;
    return TwistAnalysis{cf, mirrored, twists, is_twist_reduced(analyzed), region_graph(analyzed)};
}

}  // namespace bridgecover
