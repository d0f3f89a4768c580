#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "lamplight/gf2.hpp"

namespace lamplight {

/// Directed graph with loops. Loops are stored separately from arcs (the
/// arc matrix has a zero diagonal); a loop counts toward both the out- and
/// the in-degree of its vertex. An undirected edge is a pair of opposite
/// arcs.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), loops_(n), arcs_(n, n) {}

    std::size_t vertex_count() const { return n_; }

    bool has_loop(std::size_t v) const;
    bool has_arc(std::size_t u, std::size_t v) const;
    /// True iff both u->v and v->u are present.
    bool has_edge(std::size_t u, std::size_t v) const;

    void add_loop(std::size_t v);
    void add_arc(std::size_t u, std::size_t v);
    void add_edge(std::size_t u, std::size_t v);

    /// All non-loop arcs come in opposite pairs.
    bool is_undirected() const;
    bool all_loops() const;

    /// Loop (if any) plus outgoing arcs.
    std::size_t out_degree(std::size_t v) const;

    const GF2Vector& loops() const { return loops_; }
    /// Arc matrix: entry (u,v) = 1 iff arc u->v. Zero diagonal.
    const GF2Matrix& arcs() const { return arcs_; }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(std::size_t v) const;

    std::size_t n_ = 0;
    GF2Vector loops_;
    GF2Matrix arcs_;
};

/// Button-pressing game: row i of `matrix` lists the lamps toggled by
/// button i. Square for graph games (buttons = lamps = vertices), but
/// buttons and lamps may differ for constructed games.
struct ActionMatrix {
    std::size_t buttons = 0;
    std::size_t lamps = 0;
    GF2Matrix matrix;
};

/// Read the line-oriented graph format:
///   n <count>   vertex count; must precede everything else
///   e <u> <v>   undirected edge (arcs both ways)
///   a <u> <v>   directed arc u->v
///   l <u>       loop at u
/// Vertices are 0-indexed. '#' starts a comment. Malformed lines,
/// out-of-range vertices and duplicates raise ParseError with the line.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

/// Canonical text form, parseable by parse_graph.
std::string to_graph_text(const Graph& g);

/// Adjacency with loops on the diagonal: entry (i,j) = 1 iff arc i->j or
/// i = j with a loop. Pressing vertex i toggles exactly these lamps.
ActionMatrix adjacency(const Graph& g);

/// Result of induced_subgraph: `vertices[i]` is the original index of the
/// subgraph's vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<std::size_t> vertices;
};

/// Subgraph on the given vertices (any order; relabeled ascending) with
/// exactly the loops and arcs internal to them.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices);

inline constexpr std::size_t kDefaultPremiseCap = 20;

/// Smallest odd vertex subset (by size, then lexicographically) in which
/// no vertex has odd out-degree within the induced subgraph; nullopt when
/// every odd subset has one. Exhaustive over 2^n subsets; refuses with
/// CapExceeded when vertex_count > cap.
std::optional<std::vector<std::size_t>> find_premise_violation(
    const Graph& g, std::size_t cap = kDefaultPremiseCap);

/// True iff every odd-cardinality subset contains a vertex of odd
/// out-degree in its induced subgraph. Same cap as above.
bool odd_subset_premise(const Graph& g, std::size_t cap = kDefaultPremiseCap);

/// Two-coloring of the non-loop edge structure. Both sides ascending.
struct Bipartition {
    std::vector<std::size_t> x, y;
};

/// Bipartition ignoring loops, or nullopt if an odd cycle exists.
/// Deterministic: BFS from the lowest-index vertex of each component,
/// which is placed in X. Throws std::invalid_argument on directed arcs.
std::optional<Bipartition> bipartition(const Graph& g);

/// m-by-n grid in row-major order ((r,c) -> r*n + c), undirected edges
/// between orthogonal neighbours, a loop on every vertex.
Graph grid_graph(std::size_t m, std::size_t n);

/// Game with k buttons and 2^k - 1 lamps labeled by the nonzero k-bit
/// vectors 1..2^k-1 in label order; button i toggles the lamps whose
/// label has bit i set. Requires 1 <= k <= 63.
ActionMatrix hypercube_game(std::size_t k);

} // namespace lamplight
