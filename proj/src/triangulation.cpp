#include "bridgecover/triangulation.hpp"

#include <sstream>
#include <stdexcept>

namespace bridgecover {

Perm4 inverse(const Perm4& perm) {
    Perm4 inv{};
    for (int v = 0; v < 4; ++v) inv[perm[v]] = v;
    return inv;
}

int parity(const Perm4& perm) {
    int s = 0;
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y) s ^= perm[x] > perm[y] ? 1 : 0;
    return s;
}

bool is_permutation(const Perm4& perm) {
    std::array<bool, 4> hit{};
    for (int v : perm) {
        if (v < 0 || v > 3 || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

std::string perm_string(const Perm4& perm) {
    std::string s;
    for (int v : perm) s.push_back(static_cast<char>('0' + v));
    return s;
}

Triangulation::Triangulation(int tet_count) : faces_(tet_count) {
    if (tet_count < 0) throw std::invalid_argument("negative tetrahedron count");
}

int Triangulation::add_tetrahedron() {
    faces_.emplace_back();
    return tet_count() - 1;
}

void Triangulation::set_gluing(int tet, int face, const Gluing& g) {
    if (g.tet < 0 || g.tet >= tet_count() || g.face < 0 || g.face > 3 || !is_permutation(g.perm)) {
        throw std::invalid_argument("gluing target out of range");
    }
    auto& slot = faces_.at(tet).at(face);
    if (slot && !(*slot == g)) {
        throw std::logic_error("conflicting gluing for tetrahedron " + std::to_string(tet) + " face " +
                               std::to_string(face));
    }
    slot = g;
}

void Triangulation::glue(int tet, int face, int other, int other_face, const Perm4& perm) {
    set_gluing(tet, face, Gluing{other, other_face, perm});
    set_gluing(other, other_face, Gluing{tet, face, inverse(perm)});
}

int Triangulation::free_face_count() const {
    int count = 0;
    for (const auto& tet : faces_)
        for (const auto& g : tet) count += g ? 0 : 1;
    return count;
}

std::string to_text(const Triangulation& t) {
    std::ostringstream os;
    os << "tri " << t.tet_count() << '\n';
    for (int a = 0; a < t.tet_count(); ++a) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(a, f);
            if (!g) continue;
            const bool smaller = a < g->tet || (a == g->tet && f <= g->face);
            const auto& back = t.gluing(g->tet, g->face);
            const bool paired = back && back->tet == a && back->face == f;
            if (!smaller && paired) continue;
            os << a << ' ' << f << " -> " << g->tet << ' ' << g->face << ' ' << perm_string(g->perm) << '\n';
        }
    }
    return os.str();
}

Triangulation parse_triangulation(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    int count = -1;
    if (!(in >> word >> count) || word != "tri" || count < 0) {
        throw std::invalid_argument("triangulation text must start with `tri <count>`");
    }
    Triangulation t(count);
    int a, f, b, g;
    std::string arrow, perm;
    while (in >> a >> f >> arrow >> b >> g >> perm) {
        if (arrow != "->" || perm.size() != 4) throw std::invalid_argument("malformed gluing line");
        if (a < 0 || a >= count || f < 0 || f > 3) throw std::invalid_argument("gluing source out of range");
        Perm4 p{};
        for (int v = 0; v < 4; ++v) p[v] = perm[v] - '0';
        if (!is_permutation(p)) throw std::invalid_argument("gluing permutation is not a bijection: " + perm);
        t.glue(a, f, b, g, p);
    }
    if (!in.eof()) throw std::invalid_argument("trailing garbage in triangulation text");
    return t;
}

}  // namespace bridgecover
