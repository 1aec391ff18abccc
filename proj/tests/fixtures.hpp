#pragma once

/* Shared test fixtures: small quivers and one fully worked 4-vertex example
 * whose every intermediate quantity is pinned in the test files. */

#include "symquiv/orbits.hpp"
#include "symquiv/quiver.hpp"
#include "symquiv/representation.hpp"

#include <map>
#include <string>
#include <vector>

namespace fixtures {

inline symquiv::SymQuiverA make_quiver(const std::string& dirs, int eps) {
    std::vector<symquiv::ArrowDir> d;
    for (char c : dirs)
        d.push_back(c == 'L' ? symquiv::ArrowDir::Left : symquiv::ArrowDir::Right);
    return symquiv::SymQuiverA::make(static_cast<int>(dirs.size()) + 1, d, eps);
}

// 2-vertex bipartite quiver (single arrow 2 -> 1), dimension (k, k).
inline symquiv::SymQuiverA a2(int eps) { return make_quiver("L", eps); }

// 4-vertex bipartite quiver with arrows 2 -> 1, 2 -> 3, 4 -> 3.
inline symquiv::SymQuiverA a4_bipartite(int eps) { return make_quiver("LRL", eps); }

// Equioriented 3-vertex quiver 1 -> 2 -> 3 (not bipartite).
inline symquiv::SymQuiverA a3_path(int eps) { return make_quiver("RR", eps); }

// The worked example: the 4-vertex bipartite quiver above with eps = -1,
// dimensions (1, 3, 3, 1), and matrices A (arrow 2 -> 1) and B (arrow 2 -> 3,
// skew-symmetric as the mirror-fixed arrow requires).
struct WorkedExample {
    symquiv::SymQuiverA quiver = a4_bipartite(-1);
    std::vector<int> dims{1, 3, 3, 1};
    symquiv::IntMatrix a = symquiv::IntMatrix::from_rows({{1, 0, 0}});
    symquiv::IntMatrix b = symquiv::IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});

    symquiv::Representation representation() const {
        return symquiv::symmetric_embed(quiver, dims, {{1, a}, {2, b}});
    }
};

}  // namespace fixtures
