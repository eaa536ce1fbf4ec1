// Loose triangulations: tetrahedra glued along faces by vertex bijections.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bridgecover {

// perm[v] is the image of tetrahedron vertex v; face f is opposite vertex f.
using Perm4 = std::array<int, 4>;

Perm4 inverse(const Perm4& perm);
int parity(const Perm4& perm);
bool is_permutation(const Perm4& perm);
std::string perm_string(const Perm4& perm);

struct Gluing {
    int tet = 0;
    int face = 0;
    Perm4 perm{0, 1, 2, 3};

    bool operator==(const Gluing&) const = default;
};

class Triangulation {
public:
    explicit Triangulation(int tet_count = 0);

    int tet_count() const { return static_cast<int>(faces_.size()); }
    int add_tetrahedron();

    const std::optional<Gluing>& gluing(int tet, int face) const { return faces_.at(tet).at(face); }

    /// Records one side only; a second, different record for the same face
    /// throws std::logic_error.
    void set_gluing(int tet, int face, const Gluing& g);

    /// Records both sides of a face pairing.
    void glue(int tet, int face, int other, int other_face, const Perm4& perm);

    void unglue(int tet, int face) { faces_.at(tet).at(face).reset(); }

    int free_face_count() const;

private:
    std::vector<std::array<std::optional<Gluing>, 4>> faces_;
};

/// `tri <count>` then `<tet> <face> -> <tet'> <face'> <perm>` for every
/// glued face, each pairing once from its lexicographically smaller side.
std::string to_text(const Triangulation& t);

/// Inverse of to_text; throws std::invalid_argument on malformed input.
Triangulation parse_triangulation(const std::string& text);

}  // namespace bridgecover
