#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "lamplight/errors.hpp"
#include "lamplight/gf2.hpp"
#include "lamplight/graph.hpp"
#include "lamplight/matchings.hpp"
#include "lamplight/mikado.hpp"
#include "lamplight/solver.hpp"
#include "report.hpp"

namespace {

using namespace lamplight;
using lamplight::cli::Report;

constexpr int kOk = 0;        // solved / true / constructed
constexpr int kError = 1;     // usage, parse, cap or internal errors
constexpr int kNegative = 2;  // well-formed question, negative answer

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

std::vector<std::size_t> set_indices(const GF2Vector& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) out.push_back(i);
    return out;
}

std::string point_list(const std::vector<Point>& pts) {
    std::string out;
    for (const auto& p : pts) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
    }
    return out;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

void emit(const Report& rep, bool as_json) {
    std::cout << (as_json ? rep.json_text() : rep.text());
}

int cmd_solve(const std::string& file, const std::string& target_s, bool as_json) {
    const Graph g = load_graph(file);
    const ActionMatrix a = adjacency(g);
    LampConfig target = dark(a.lamps);
    if (target_s == "all")
        target.bits = GF2Vector::ones(a.lamps);
    else if (target_s.size() == a.lamps)
        target.bits = GF2Vector::from_bits(target_s);
    else
        throw std::invalid_argument("target must be 'all' or a " + std::to_string(a.lamps) +
                                    "-bit string");

    Report rep("solve");
    rep.input("graph", file);
    rep.input("target", target_s);
    const auto p = lightable(a, target);
    if (!p) {
        rep.result("solvable", false);
        emit(rep, as_json);
        return kNegative;
    }
    if (apply(a, *p, dark(a.lamps)) != target)
        throw std::logic_error("solve: press set failed the apply check");
    rep.result("solvable", true);
    rep.result("verified", true);
    rep.witness("press_set", p->bits.to_string());
    rep.witness("pressed", set_indices(p->bits));
    emit(rep, as_json);
    return kOk;
}

int cmd_light_all(const std::string& file, bool constructive, std::size_t premise_cap,
                  bool as_json) {
    const Graph g = load_graph(file);
    const ActionMatrix a = adjacency(g);
    const GF2Vector everything = GF2Vector::ones(a.lamps);

    Report rep("light-all");
    rep.input("graph", file);
    rep.input("constructive", constructive);

    PressSet p{GF2Vector(a.buttons)};
    if (constructive) {
        LightAllStats stats;
        try {
            p = light_all_constructive(g, &stats, premise_cap);
        } catch (const PremiseViolation& e) {
            rep.result("premise_holds", false);
            rep.result("violating_subset", e.subset());
            emit(rep, as_json);
            return kNegative;
        }
        rep.result("lightable", true);
        rep.result("recursive_calls", stats.recursive_calls);
        rep.result("memo_hits", stats.memo_hits);
        rep.result("early_returns", stats.early_returns);
        rep.result("case1_merges", stats.case1_merges);
        rep.result("case2_presses", stats.case2_presses);
    } else {
        const auto found = lightable(a, LampConfig{everything});
        if (!found) {
            rep.result("lightable", false);
            emit(rep, as_json);
            return kNegative;
        }
        p = *found;
        rep.result("lightable", true);
    }
    if (apply(a, p, dark(a.lamps)).bits != everything)
        throw std::logic_error("light-all: press set failed the apply check");
    rep.result("verified", true);
    rep.witness("press_set", p.bits.to_string());
    rep.witness("pressed", set_indices(p.bits));
    emit(rep, as_json);
    return kOk;
}

int cmd_grid(std::size_t m, std::size_t n, std::size_t width_cap, bool as_json) {
    const bool controllable = grid_controllable(m, n);
    const int tiling = monomer_dimer_parity(m, n, width_cap);
    const int matching = matching_parity(grid_graph(m, n));
    const bool agree = controllable == (tiling == 1) && tiling == matching;

    Report rep("grid");
    rep.input("m", m);
    rep.input("n", n);
    rep.result("controllable", controllable);
    rep.result("tiling_parity", tiling ? "odd" : "even");
    rep.result("matching_parity", matching ? "odd" : "even");
    rep.result("agree", agree);
    emit(rep, as_json);
    if (!agree) return kError;
    return controllable ? kOk : kNegative;
}

int cmd_equiv(const std::string& file, std::size_t rank_cap, bool as_json) {
    const Graph g = load_graph(file);
    const auto eq = undirected_equivalent(g, rank_cap);
    if (!row_spaces_equal(adjacency(g).matrix.with_columns_permuted(eq.perm),
                          adjacency(eq.graph).matrix))
        throw std::logic_error("equiv: row-space check failed");

    Report rep("equiv");
    rep.input("graph", file);
    rep.result("k", eq.k);
    rep.result("loops", eq.graph.loops().popcount());
    rep.result("verified", true);
    rep.witness("perm", eq.perm);
    rep.result_block("graph", split_lines(to_graph_text(eq.graph)));
    emit(rep, as_json);
    return kOk;
}

int cmd_dark_order(const std::string& file, std::size_t order_cap, bool as_json) {
    const Graph g = load_graph(file);
    const ActionMatrix a = adjacency(g);
    const GF2Vector everything = GF2Vector::ones(a.lamps);

    Report rep("dark-order");
    rep.input("graph", file);
    const auto p = lightable(a, LampConfig{everything});
    if (!p) {
        rep.result("lightable", false);
        emit(rep, as_json);
        return kNegative;
    }
    rep.result("lightable", true);
    rep.witness("press_set", p->bits.to_string());

    const auto seq = dark_only_order(g, *p, order_cap);
    if (!seq) {
        rep.result("ordering_exists", false);
        emit(rep, as_json);
        return kNegative;
    }
    GF2Vector config(a.lamps);
    for (const auto v : *seq) {
        if (config.get(v)) throw std::logic_error("dark-order: sequence presses a lit vertex");
        config ^= a.matrix.row(v);
    }
    if (config != everything)
        throw std::logic_error("dark-order: sequence does not light all lamps");
    rep.result("ordering_exists", true);
    rep.result("verified", true);
    rep.witness("order", *seq);
    emit(rep, as_json);
    return kOk;
}

int cmd_mikado(std::size_t k, const std::string& render_file, const std::string& mode_s,
               const std::vector<std::size_t>& scan, std::size_t window_cap, bool as_json) {
    Report rep("mikado");
    rep.input("k", k);
    const Pattern d = mikado_diamond(k);
    const LitSet lit = lit_lamps(d);
    const std::int64_t s = std::int64_t(1) << (k - 1);
    const Pattern expected = make_pattern({{0, 0}, {s, 0}, {-s, 0}, {0, s}, {0, -s}});
    if (lit != expected)
        throw std::logic_error("mikado: lit lamps are not the center plus the axis extremes");
    rep.result("presses", d.size());
    rep.result("lamps_lit", lit.size());
    rep.result("extreme_distance", s);
    rep.witness("lit", point_list(lit));

    if (!render_file.empty()) {
        const RenderMode mode =
            mode_s == "lamps" ? RenderMode::lamps : RenderMode::presses;
        const Bitmap bm = render(d, mode);
        std::ofstream out(render_file, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write bitmap file '" + render_file + "'");
        out << bm.to_pbm();
        if (!out) throw std::runtime_error("failed writing bitmap file '" + render_file + "'");
        rep.result("render_file", render_file);
        rep.result("render_mode", mode_s);
        rep.result("render_width", bm.width);
        rep.result("render_height", bm.height);
    }

    if (!scan.empty()) {
        const auto found = min_lamps_search(scan[0], scan[1], window_cap);
        rep.result("scan_window", std::to_string(scan[0]) + "x" + std::to_string(scan[1]));
        rep.result("scan_min_lit", found.min_lit);
        std::string histogram;
        for (const auto& [count, patterns] : found.histogram) {
            if (!histogram.empty()) histogram += " ";
            histogram += std::to_string(count) + ":" + std::to_string(patterns);
        }
        rep.result("scan_histogram", histogram);
        const auto five = found.witnesses.find(5);
        rep.result("scan_five_lamp_patterns",
                   five == found.witnesses.end() ? std::size_t(0) : five->second.size());
    }
    emit(rep, as_json);
    return kOk;
}

int cmd_matchings(const std::string& file, std::size_t enum_cap, bool as_json) {
    const Graph g = load_graph(file);
    const std::uint64_t count = enumerate_complete_matchings(g, enum_cap);
    const int parity = matching_parity(g);
    const bool controllable = fully_controllable(adjacency(g));
    const bool agree = int(count % 2) == parity && parity == (controllable ? 1 : 0);

    Report rep("matchings");
    rep.input("graph", file);
    rep.result("count", count);
    rep.result("parity", count % 2 ? "odd" : "even");
    rep.result("det_parity", parity ? "odd" : "even");
    rep.result("controllable", controllable);
    rep.result("agree", agree);
    emit(rep, as_json);
    if (!agree) return kError;
    return controllable ? kOk : kNegative;
}

int cmd_max_lit(const std::string& file, std::size_t rank_cap, bool as_json) {
    const Graph g = load_graph(file);
    const ActionMatrix a = adjacency(g);
    const auto ml = max_lit(a, rank_cap);
    const GF2Vector lit = apply(a, ml.witness, dark(a.lamps)).bits;
    if (lit.popcount() != ml.lamps_lit)
        throw std::logic_error("max-lit: witness does not light the reported count");

    Report rep("max-lit");
    rep.input("graph", file);
    rep.result("max_lit", ml.lamps_lit);
    rep.result("lamps", a.lamps);
    rep.result("verified", true);
    rep.witness("press_set", ml.witness.bits.to_string());
    rep.witness("pressed", set_indices(ml.witness.bits));
    rep.witness("lit", lit.to_string());
    emit(rep, as_json);
    return kOk;
}

int cmd_hypercube(std::size_t k, std::size_t rank_cap, std::size_t majority_cap, bool as_json) {
    const ActionMatrix a = hypercube_game(k);
    const auto ml = max_lit(a, rank_cap);
    if (apply(a, ml.witness, dark(a.lamps)).bits.popcount() != ml.lamps_lit)
        throw std::logic_error("hypercube: max-lit witness failed the apply check");
    const PressSet mw = majority_witness(a, majority_cap);
    const std::size_t majority_lit = apply(a, mw, dark(a.lamps)).bits.popcount();
    if (2 * majority_lit <= a.lamps)
        throw std::logic_error("hypercube: majority witness does not clear half");

    Report rep("hypercube");
    rep.input("k", k);
    rep.result("buttons", a.buttons);
    rep.result("lamps", a.lamps);
    rep.result("max_lit", ml.lamps_lit);
    rep.result("majority_lit", majority_lit);
    rep.result("verified", true);
    rep.witness("max_press_set", ml.witness.bits.to_string());
    rep.witness("majority_press_set", mw.bits.to_string());
    emit(rep, as_json);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lamp lighting games on graphs and grids"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as JSON instead of key: value text");

    std::string solve_file, solve_target = "all";
    auto* solve_cmd = app.add_subcommand("solve", "find a press set reaching a target");
    solve_cmd->fallthrough();
    solve_cmd->add_option("graph", solve_file, "graph file")->required();
    solve_cmd->add_option("--target", solve_target, "'all' or a bit string (lamp i = char i)")
        ->capture_default_str();

    std::string la_file;
    bool la_constructive = false;
    std::size_t la_premise_cap = kDefaultPremiseCap;
    auto* la_cmd = app.add_subcommand("light-all", "light every lamp from dark");
    la_cmd->fallthrough();
    la_cmd->add_option("graph", la_file, "graph file")->required();
    la_cmd->add_flag("--constructive", la_constructive,
                     "use the inductive construction instead of elimination");
    la_cmd->add_option("--premise-cap", la_premise_cap,
                       "largest n for the exhaustive odd-subset premise check")
        ->capture_default_str();

    std::size_t grid_m = 0, grid_n = 0, grid_width_cap = kDefaultWidthCap;
    auto* grid_cmd = app.add_subcommand("grid", "controllability of the m-by-n grid, three ways");
    grid_cmd->fallthrough();
    grid_cmd->add_option("m", grid_m, "rows")->required();
    grid_cmd->add_option("n", grid_n, "columns")->required();
    grid_cmd->add_option("--width-cap", grid_width_cap, "largest min(m,n) for the tiling scan")
        ->capture_default_str();

    std::string eq_file;
    std::size_t eq_rank_cap = kDefaultRankCap;
    auto* eq_cmd = app.add_subcommand("equiv", "equivalent undirected game");
    eq_cmd->fallthrough();
    eq_cmd->add_option("graph", eq_file, "graph file")->required();
    eq_cmd->add_option("--rank-cap", eq_rank_cap, "largest action-matrix rank to scan")
        ->capture_default_str();

    std::string do_file;
    std::size_t do_order_cap = kDefaultOrderCap;
    auto* do_cmd = app.add_subcommand("dark-order", "light all lamps pressing dark buttons only");
    do_cmd->fallthrough();
    do_cmd->add_option("graph", do_file, "graph file")->required();
    do_cmd->add_option("--order-cap", do_order_cap,
                       "largest press-set size for the exhaustive ordering search")
        ->capture_default_str();

    std::size_t mik_k = 0, mik_window_cap = kDefaultWindowCap;
    std::string mik_render, mik_mode = "presses";
    std::vector<std::size_t> mik_scan;
    auto* mik_cmd = app.add_subcommand("mikado", "diamond press patterns on the infinite board");
    mik_cmd->fallthrough();
    mik_cmd->add_option("k", mik_k, "diamond index, k >= 1")->required();
    mik_cmd->add_option("--render", mik_render, "write a P1 bitmap to this file");
    mik_cmd->add_option("--mode", mik_mode, "what to render")
        ->check(CLI::IsMember({"presses", "lamps"}))
        ->capture_default_str();
    mik_cmd->add_option("--scan", mik_scan, "exhaust all patterns in a w h window")
        ->expected(2);
    mik_cmd->add_option("--window-cap", mik_window_cap, "largest w*h for --scan")
        ->capture_default_str();

    std::string mat_file;
    std::size_t mat_enum_cap = kDefaultEnumCap;
    auto* mat_cmd = app.add_subcommand("matchings", "complete matchings and controllability");
    mat_cmd->fallthrough();
    mat_cmd->add_option("graph", mat_file, "graph file")->required();
    mat_cmd->add_option("--enum-cap", mat_enum_cap, "largest n for matching enumeration")
        ->capture_default_str();

    std::string ml_file;
    std::size_t ml_rank_cap = kDefaultRankCap;
    auto* ml_cmd = app.add_subcommand("max-lit", "maximal number of lamps lit at once");
    ml_cmd->fallthrough();
    ml_cmd->add_option("graph", ml_file, "graph file")->required();
    ml_cmd->add_option("--rank-cap", ml_rank_cap, "largest action-matrix rank to scan")
        ->capture_default_str();

    std::size_t hc_k = 0, hc_rank_cap = kDefaultRankCap, hc_majority_cap = kDefaultMajorityCap;
    auto* hc_cmd = app.add_subcommand("hypercube", "game with k buttons and 2^k - 1 lamps");
    hc_cmd->fallthrough();
    hc_cmd->add_option("k", hc_k, "number of buttons, 1 <= k <= 63")->required();
    hc_cmd->add_option("--rank-cap", hc_rank_cap, "largest rank to scan for max-lit")
        ->capture_default_str();
    hc_cmd->add_option("--majority-cap", hc_majority_cap,
                       "largest button count for the exhaustive majority search")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve_file, solve_target, as_json);
        if (*la_cmd) return cmd_light_all(la_file, la_constructive, la_premise_cap, as_json);
        if (*grid_cmd) return cmd_grid(grid_m, grid_n, grid_width_cap, as_json);
        if (*eq_cmd) return cmd_equiv(eq_file, eq_rank_cap, as_json);
        if (*do_cmd) return cmd_dark_order(do_file, do_order_cap, as_json);
        if (*mik_cmd)
            return cmd_mikado(mik_k, mik_render, mik_mode, mik_scan, mik_window_cap, as_json);
        if (*mat_cmd) return cmd_matchings(mat_file, mat_enum_cap, as_json);
        if (*ml_cmd) return cmd_max_lit(ml_file, ml_rank_cap, as_json);
        if (*hc_cmd) return cmd_hypercube(hc_k, hc_rank_cap, hc_majority_cap, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
