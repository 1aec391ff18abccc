#include "symquiv/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symquiv {

namespace {

nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

int require_int(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::runtime_error("missing or non-integer field \"" + key + "\"");
    return j[key].get<int>();
}

}  // namespace

QuiverInput load_quiver(const nlohmann::json& j) {
    const int n = require_int(j, "vertices");
    const int eps = require_int(j, "epsilon");
    if (!j.contains("arrows") || !j["arrows"].is_array())
        throw std::runtime_error("missing \"arrows\" array");
    if (n < 1) throw std::runtime_error("\"vertices\" must be positive");
    std::vector<ArrowDir> dirs(n > 0 ? n - 1 : 0, ArrowDir::Left);
    std::vector<char> seen(n, 0);
    for (const auto& a : j["arrows"]) {
        const int from = require_int(a, "from");
        const int to = require_int(a, "to");
        if (from < 1 || from > n || to < 1 || to > n || std::abs(from - to) != 1)
            throw std::runtime_error("arrow must join adjacent vertices of the line");
        const int e = std::min(from, to);
        if (seen[e]) throw std::runtime_error("duplicate arrow on edge " + std::to_string(e));
        seen[e] = 1;
        dirs[e - 1] = to > from ? ArrowDir::Right : ArrowDir::Left;
    }
    for (int e = 1; e <= n - 1; ++e)
        if (!seen[e]) throw std::runtime_error("no arrow on edge " + std::to_string(e));

    QuiverInput out{SymQuiverA::make(n, std::move(dirs), eps), {}};
    if (!j.contains("dims") || !j["dims"].is_array() ||
        static_cast<int>(j["dims"].size()) != n)
        throw std::runtime_error("\"dims\" must list one dimension per vertex");
    for (const auto& d : j["dims"]) {
        if (!d.is_number_integer()) throw std::runtime_error("dimensions must be integers");
        out.dims.push_back(d.get<int>());
    }
    validate_dims(out.quiver, out.dims);
    return out;
}

QuiverInput load_quiver_file(const std::string& path) { return load_quiver(parse_file(path)); }

std::map<int, IntMatrix> load_representation(const nlohmann::json& j, const SymQuiverA& q,
                                             const std::vector<int>& dims) {
    validate_dims(q, dims);
    if (!j.contains("matrices") || !j["matrices"].is_array())
        throw std::runtime_error("missing \"matrices\" array");
    std::map<int, IntMatrix> out;
    for (const auto& entry : j["matrices"]) {
        const int from = require_int(entry, "from");
        const int to = require_int(entry, "to");
        if (std::abs(from - to) != 1 || std::min(from, to) < 1 ||
            std::max(from, to) > q.vertex_count())
            throw std::runtime_error("matrix must sit on an edge of the line");
        const int e = std::min(from, to);
        if (q.tail(e) != from || q.head(e) != to)
            throw std::runtime_error("matrix orientation on edge " + std::to_string(e) +
                                     " disagrees with the quiver");
        if (!q.is_positive_edge(e) && !q.is_fixed_edge(e))
            throw std::runtime_error("give matrices on positive and self-paired edges only; "
                                     "edge " + std::to_string(e) + " is determined by its mirror");
        if (out.count(e)) throw std::runtime_error("duplicate matrix on edge " + std::to_string(e));
        const int rows = dims[to - 1], cols = dims[from - 1];
        if (!entry.contains("entries") || !entry["entries"].is_array() ||
            static_cast<int>(entry["entries"].size()) != rows)
            throw std::runtime_error("matrix on edge " + std::to_string(e) + " must have " +
                                     std::to_string(rows) + " rows");
        IntMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            const auto& row = entry["entries"][i];
            if (!row.is_array() || static_cast<int>(row.size()) != cols)
                throw std::runtime_error("matrix on edge " + std::to_string(e) + " must have " +
                                         std::to_string(cols) + " columns");
            for (int c = 0; c < cols; ++c) {
                if (!row[c].is_number_integer())
                    throw std::runtime_error("matrix entries must be integers");
                m(i, c) = Int(row[c].get<long long>());
            }
        }
        out.emplace(e, std::move(m));
    }
    for (int e = 1; e <= q.edge_count(); ++e)
        if ((q.is_positive_edge(e) || q.is_fixed_edge(e)) && !out.count(e))
            throw std::runtime_error("missing matrix on edge " + std::to_string(e));
    return out;
}

std::map<int, IntMatrix> load_representation_file(const std::string& path, const SymQuiverA& q,
                                                  const std::vector<int>& dims) {
    return load_representation(parse_file(path), q, dims);
}

IntMatrix load_int_matrix(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) row.emplace_back(tok);
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("matrix rows must all have the same length");
        rows.push_back(std::move(row));
    }
    IntMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

IntMatrix load_int_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_int_matrix(buf.str());
}

nlohmann::json poset_to_json(const OrbitSpace& space, const OrbitPoset& poset,
                             const std::vector<Permutation>& veps) {
    nlohmann::json nodes = nlohmann::json::array();
    for (std::size_t i = 0; i < space.orbits.size(); ++i) {
        nlohmann::json ranks = nlohmann::json::array();
        for (std::size_t k = 0; k < space.intervals.size(); ++k) {
            if (space.intervals[k].length() < 2) continue;
            ranks.push_back({space.intervals[k].lo, space.intervals[k].hi,
                             space.orbits[i].ranks[k]});
        }
        nodes.push_back({{"id", static_cast<int>(i)},
                         {"vperm", veps[i].str()},
                         {"ranks", std::move(ranks)}});
    }
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& [a, b] : poset.covers) covers.push_back({a, b});
    return nlohmann::json{{"nodes", std::move(nodes)}, {"covers", std::move(covers)}};
}

}  // namespace symquiv
