#pragma once

#include "symquiv/matrix.hpp"
#include "symquiv/orbits.hpp"
#include "symquiv/poset.hpp"
#include "symquiv/quiver.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace symquiv {

/*
 * File formats.
 *
 * Quiver (JSON):
 *   {
 *     "vertices": 4,
 *     "arrows": [{"from": 2, "to": 1}, {"from": 2, "to": 3}, {"from": 4, "to": 3}],
 *     "epsilon": -1,
 *     "dims": [1, 3, 3, 1]
 *   }
 * Arrows must cover each edge of the line exactly once.
 *
 * Representation (JSON):
 *   {"matrices": [{"from": 2, "to": 1, "entries": [[1, 0, 0]]},
 *                 {"from": 2, "to": 3, "entries": [[0,1,0],[-1,0,0],[0,0,0]]}]}
 * One matrix per positive edge plus the self-paired edge (when present), in
 * row-major integer entries of shape d(to) x d(from); mirrored arrows are
 * filled in automatically.
 *
 * Integer matrix (text): whitespace-separated rows, one per line; blank
 * lines and lines starting with '#' are ignored.
 */
struct QuiverInput {
    SymQuiverA quiver;
    std::vector<int> dims;
};

QuiverInput load_quiver(const nlohmann::json& j);
QuiverInput load_quiver_file(const std::string& path);

std::map<int, IntMatrix> load_representation(const nlohmann::json& j, const SymQuiverA& q,
                                             const std::vector<int>& dims);
std::map<int, IntMatrix> load_representation_file(const std::string& path, const SymQuiverA& q,
                                                  const std::vector<int>& dims);

IntMatrix load_int_matrix(const std::string& text);
IntMatrix load_int_matrix_file(const std::string& path);

/*
 * Poset serialization:
 *   {
 *     "nodes": [{"id": 0, "vperm": "21563487", "ranks": [[1, 2, 1], ...]}, ...],
 *     "covers": [[0, 1], ...]
 *   }
 * ranks lists [lo, hi, rank] for every interval with at least two vertices,
 * in lexicographic interval order; covers are (lower, upper) orbit id pairs.
 */
nlohmann::json poset_to_json(const OrbitSpace& space, const OrbitPoset& poset,
                             const std::vector<Permutation>& veps);

}  // namespace symquiv
