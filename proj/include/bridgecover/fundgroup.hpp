// Triangular presentation of the fundamental group read off the quotient
// 2-skeleton of a Minkus scheme.
#pragma once

#include <string>
#include <vector>

#include "bridgecover/minkus.hpp"
#include "bridgecover/verify.hpp"

namespace bridgecover {

struct Letter {
    int generator = 0;
    int exponent = 1;  // +1 or -1

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    int triangular_count = 0;  // relators of length exactly 3
    int short_count = 0;       // relators of length <= 2
    int degenerate_count = 0;  // length-3 relators on fewer than three distinct generators

    /// Recomputes the three counters from the relators.
    void recount();
};

/// Generators are the quotient edges g0, g1, ...; one length-3 relator per
/// quotient triangle read from the base point N, then length-1 relators
/// killing a spanning tree of the 1-skeleton.
GroupPresentation presentation_from_scheme(const MinkusScheme& sch);

/// Drops relators equal to an earlier one up to cyclic rotation and inversion.
GroupPresentation deduplicate(const GroupPresentation& g);

HomologyResult abelianization(const GroupPresentation& g);

/// n(p-1), the number of length-3 relators in the constructed presentation.
Integer t_invariant_upper(const SlopePair& s, int n);

/// `gen <symbol>` lines then `rel <word>` lines with tokens like `g7^-1`.
std::string to_text(const GroupPresentation& g);

/// Inverse of to_text; throws std::invalid_argument on unknown symbols.
GroupPresentation parse_presentation(const std::string& text);

}  // namespace bridgecover
