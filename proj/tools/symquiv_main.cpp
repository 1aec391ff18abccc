/*
 * symquiv: orbits of symmetric quiver representation spaces and their
 * dictionary with Bruhat order on (fixed-point-free) involutions.
 *
 * Subcommands:
 *   orbits    enumerate orbits of a space (multiplicities and interval ranks)
 *   zel       permutations attached to a representation
 *   poset     degeneration order as JSON or Graphviz
 *   image     the set of permutations attached to the orbits
 *   check     machine-verify the dictionary on one space
 *   bruhat    compare two permutations in Bruhat order
 *   diagrams  left-justified diagrams and essential cells of a permutation
 *   ranks     northwest rank table of an integer matrix
 *
 * Exit codes: 0 success, 1 bad input or usage, 2 verification failure.
 */
#include "symquiv/io.hpp"
#include "symquiv/orbits.hpp"
#include "symquiv/permutation.hpp"
#include "symquiv/poset.hpp"
#include "symquiv/representation.hpp"
#include "symquiv/zelevinsky.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace {

using namespace symquiv;

std::string cells_str(const std::vector<std::pair<int, int>>& cells) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ' ';
        os << '(' << cells[i].first << ',' << cells[i].second << ')';
    }
    return os.str();
}

void print_space_header(const OrbitSpace& space) {
    if (space.reduction.trivial() &&
        space.reduction.original == space.reduction.bipartite)
        return;
    std::cout << "bipartite vertices=" << space.reduction.bipartite.vertex_count() << " dims=";
    for (std::size_t i = 0; i < space.dims.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << space.dims[i];
    }
    std::cout << " contracted=";
    if (space.reduction.contracted.empty()) std::cout << '-';
    for (std::size_t i = 0; i < space.reduction.contracted.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << space.reduction.contracted[i];
    }
    std::cout << '\n';
}

int run_orbits(const std::string& quiver_path) {
    const QuiverInput in = load_quiver_file(quiver_path);
    const OrbitSpace space = build_orbit_space(in.quiver, in.dims);
    print_space_header(space);
    for (std::size_t i = 0; i < space.orbits.size(); ++i) {
        const Orbit& o = space.orbits[i];
        std::cout << "orbit " << i << "\tmult";
        for (std::size_t k = 0; k < space.intervals.size(); ++k)
            if (o.mult[k] != 0)
                std::cout << ' ' << space.intervals[k].str() << '=' << o.mult[k];
        std::cout << "\tranks";
        for (std::size_t k = 0; k < space.intervals.size(); ++k)
            if (space.intervals[k].length() >= 2)
                std::cout << ' ' << space.intervals[k].str() << '=' << o.ranks[k];
        std::cout << '\n';
    }
    return 0;
}

int run_zel(const std::string& quiver_path, const std::string& rep_path, int orbit_index) {
    const QuiverInput in = load_quiver_file(quiver_path);
    if (rep_path.empty() == (orbit_index < 0))
        throw std::runtime_error("zel needs exactly one of --rep and --orbit");
    const Representation rep = [&] {
        if (!rep_path.empty()) {
            const auto given = load_representation_file(rep_path, in.quiver, in.dims);
            return lift_representation(bipartite_reduce(in.quiver), in.dims, given);
        }
        const OrbitSpace space = build_orbit_space(in.quiver, in.dims);
        if (orbit_index >= static_cast<int>(space.orbits.size()))
            throw std::runtime_error("orbit index " + std::to_string(orbit_index) +
                                     " out of range; the space has " +
                                     std::to_string(space.orbits.size()) + " orbits");
        return orbit_representative(space, orbit_index);
    }();
    std::cout << "v " << zelevinsky_permutation(rep).str() << '\n';
    std::cout << "veps " << sym_zelevinsky_permutation(rep).str() << '\n';
    return 0;
}

int run_poset(const std::string& quiver_path, const std::string& format,
              const std::string& out_path, bool pretty) {
    const QuiverInput in = load_quiver_file(quiver_path);
    const OrbitSpace space = build_orbit_space(in.quiver, in.dims);
    const OrbitPoset poset = degeneration_poset(space);
    const std::vector<Permutation> veps = orbit_permutations(space);
    std::string text;
    if (format == "json") {
        const nlohmann::json j = poset_to_json(space, poset, veps);
        text = (pretty ? j.dump(2) : j.dump()) + '\n';
    } else if (format == "dot") {
        text = to_dot(space, poset, veps);
    } else {
        throw std::runtime_error("unknown poset format '" + format + "' (use dot or json)");
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
    return 0;
}

int run_image(const std::string& quiver_path) {
    const QuiverInput in = load_quiver_file(quiver_path);
    const OrbitSpace space = build_orbit_space(in.quiver, in.dims);
    std::vector<Permutation> image = orbit_permutations(space);
    std::sort(image.begin(), image.end());
    for (const Permutation& w : image) std::cout << w.str() << '\n';
    return 0;
}

int run_check(const std::string& quiver_path, int max_size) {
    const QuiverInput in = load_quiver_file(quiver_path);
    const OrbitSpace space = build_orbit_space(in.quiver, in.dims);
    if (max_size > 0 && space.blocks.total() > max_size)
        throw std::runtime_error("total dimension " + std::to_string(space.blocks.total()) +
                                 " exceeds --max-size " + std::to_string(max_size));
    const VerifyReport report = verify_dictionary(space);
    for (const VerifyCheck& c : report.checks) {
        if (c.pass)
            std::cout << "check " << c.name << ": pass\n";
        else
            std::cout << "check " << c.name << ": FAIL " << c.detail << '\n';
    }
    if (!report.all_pass()) return 2;
    std::cout << report.orbit_count << " orbits, image verified\n";
    return 0;
}

int run_bruhat(const std::string& u_text, const std::string& v_text) {
    const Permutation u = Permutation::parse(u_text);
    const Permutation v = Permutation::parse(v_text);
    std::cout << u.str() << " ≤ " << v.str() << ": "
              << (bruhat_leq(u, v) ? "true" : "false") << '\n';
    return 0;
}

int run_diagrams(const std::string& w_text) {
    const Diagrams d = diagrams(Permutation::parse(w_text));
    std::cout << "D: " << cells_str(d.d) << '\n';
    std::cout << "D+: " << cells_str(d.d_plus) << '\n';
    std::cout << "D-: " << cells_str(d.d_minus) << '\n';
    std::cout << "E: " << cells_str(d.e) << '\n';
    std::cout << "E+: " << cells_str(d.e_plus) << '\n';
    std::cout << "E-: " << cells_str(d.e_minus) << '\n';
    return 0;
}

int run_ranks(const std::string& matrix_path) {
    const IntMatrix m = load_int_matrix_file(matrix_path);
    std::cout << nw_rank_table(m).str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit/involution dictionary for symmetric type A quiver representations"};
    app.require_subcommand(1);

    std::string quiver_path, rep_path, matrix_path, u_text, v_text, out_path;
    std::string format = "json";
    int orbit_index = -1, max_size = 0;
    bool pretty = false;

    CLI::App* orbits = app.add_subcommand("orbits", "enumerate orbits of a space");
    orbits->add_option("quiver", quiver_path, "quiver JSON file")->required();

    CLI::App* zel = app.add_subcommand("zel", "permutations attached to a representation");
    zel->add_option("quiver", quiver_path, "quiver JSON file")->required();
    zel->add_option("--rep", rep_path, "representation JSON file");
    zel->add_option("--orbit", orbit_index, "index of an enumerated orbit")
        ->check(CLI::NonNegativeNumber);

    CLI::App* poset = app.add_subcommand("poset", "degeneration order of the orbits");
    poset->add_option("quiver", quiver_path, "quiver JSON file")->required();
    poset->add_option("--format", format, "output format: dot or json (default json)");
    poset->add_option("--out", out_path, "write to this file instead of standard output");
    poset->add_flag("--pretty", pretty, "indent JSON output");

    CLI::App* image = app.add_subcommand("image", "permutations attached to the orbits");
    image->add_option("quiver", quiver_path, "quiver JSON file")->required();

    CLI::App* check = app.add_subcommand("check", "verify the dictionary on one space");
    check->add_option("quiver", quiver_path, "quiver JSON file")->required();
    check->add_option("--max-size", max_size,
                      "refuse spaces whose total dimension exceeds this bound");

    CLI::App* bruhat = app.add_subcommand("bruhat", "compare two permutations in Bruhat order");
    bruhat->add_option("u", u_text, "first permutation")->required();
    bruhat->add_option("v", v_text, "second permutation")->required();

    CLI::App* diag = app.add_subcommand("diagrams", "diagrams and essential cells");
    diag->add_option("w", u_text, "permutation")->required();

    CLI::App* ranks = app.add_subcommand("ranks", "northwest rank table of a matrix");
    ranks->add_option("matrix", matrix_path, "matrix text file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (orbits->parsed()) return run_orbits(quiver_path);
        if (zel->parsed()) return run_zel(quiver_path, rep_path, orbit_index);
        if (poset->parsed()) return run_poset(quiver_path, format, out_path, pretty);
        if (image->parsed()) return run_image(quiver_path);
        if (check->parsed()) return run_check(quiver_path, max_size);
        if (bruhat->parsed()) return run_bruhat(u_text, v_text);
        if (diag->parsed()) return run_diagrams(u_text);
        if (ranks->parsed()) return run_ranks(matrix_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
