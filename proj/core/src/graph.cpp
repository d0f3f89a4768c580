#include "lamplight/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "lamplight/errors.hpp"

namespace lamplight {

void Graph::check_vertex(std::size_t v) const {
    if (v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range (n = " +
                                    std::to_string(n_) + ")");
}

bool Graph::has_loop(std::size_t v) const {
    check_vertex(v);
    return loops_.get(v);
}

bool Graph::has_arc(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && arcs_.get(u, v);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    return has_arc(u, v) && has_arc(v, u);
}

void Graph::add_loop(std::size_t v) {
    check_vertex(v);
    if (loops_.get(v)) throw std::invalid_argument("duplicate loop at " + std::to_string(v));
    loops_.set(v, true);
}

void Graph::add_arc(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-arc at " + std::to_string(u) + "; use a loop");
    if (arcs_.get(u, v))
        throw std::invalid_argument("duplicate arc " + std::to_string(u) + "->" +
                                    std::to_string(v));
    arcs_.set(u, v, true);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-edge at " + std::to_string(u) + "; use a loop");
    if (arcs_.get(u, v) || arcs_.get(v, u))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
    arcs_.set(u, v, true);
    arcs_.set(v, u, true);
}

bool Graph::is_undirected() const {
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (arcs_.get(u, v) != arcs_.get(v, u)) return false;
    return true;
}

bool Graph::all_loops() const { return loops_.popcount() == n_; }

std::size_t Graph::out_degree(std::size_t v) const {
    check_vertex(v);
    return (loops_.get(v) ? 1 : 0) + arcs_.row(v).popcount();
}

namespace {

std::size_t parse_index(const std::string& tok, std::size_t lineno, const char* what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(lineno, std::string("bad ") + what + " '" + tok + "'");
    return value;
}

std::size_t parse_vertex(const std::string& tok, std::size_t lineno, std::size_t n) {
    const std::size_t v = parse_index(tok, lineno, "vertex");
    if (v >= n)
        throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range (n = " +
                                     std::to_string(n) + ")");
    return v;
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::optional<Graph> g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(std::move(t));
        if (tok.empty()) continue;

        const std::string& kind = tok[0];
        if (kind == "n") {
            if (g) throw ParseError(lineno, "duplicate 'n' line");
            if (tok.size() != 2) throw ParseError(lineno, "'n' takes one count");
            g.emplace(parse_index(tok[1], lineno, "vertex count"));
            continue;
        }
        if (!g) throw ParseError(lineno, "'" + kind + "' before the 'n' line");
        const std::size_t n = g->vertex_count();
        if (kind == "e" || kind == "a") {
            if (tok.size() != 3)
                throw ParseError(lineno, "'" + kind + "' takes two vertices");
            const std::size_t u = parse_vertex(tok[1], lineno, n);
            const std::size_t v = parse_vertex(tok[2], lineno, n);
            if (u == v) throw ParseError(lineno, "self-arc at " + tok[1] + "; use 'l'");
            if (kind == "e") {
                if (g->has_arc(u, v) || g->has_arc(v, u))
                    throw ParseError(lineno, "duplicate edge " + tok[1] + " " + tok[2]);
                g->add_edge(u, v);
            } else {
                if (g->has_arc(u, v))
                    throw ParseError(lineno, "duplicate arc " + tok[1] + " " + tok[2]);
                g->add_arc(u, v);
            }
        } else if (kind == "l") {
            if (tok.size() != 2) throw ParseError(lineno, "'l' takes one vertex");
            const std::size_t v = parse_vertex(tok[1], lineno, n);
            if (g->has_loop(v)) throw ParseError(lineno, "duplicate loop " + tok[1]);
            g->add_loop(v);
        } else {
            throw ParseError(lineno, "unknown directive '" + kind + "'");
        }
    }
    if (!g) throw ParseError(lineno ? lineno : 1, "missing 'n' line");
    return *std::move(g);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string to_graph_text(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out = "n " + std::to_string(n) + "\n";
    for (std::size_t v = 0; v < n; ++v)
        if (g.has_loop(v)) out += "l " + std::to_string(v) + "\n";
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (g.has_edge(u, v))
                out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (g.has_arc(u, v) && !g.has_arc(v, u))
                out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

ActionMatrix adjacency(const Graph& g) {
    const std::size_t n = g.vertex_count();
    GF2Matrix m(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        m.row(u) = g.arcs().row(u);
        if (g.has_loop(u)) m.set(u, u, true);
    }
    return {n, n, std::move(m)};
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices) {
    std::vector<std::size_t> vs = vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex");
    for (const auto v : vs)
        if (v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                        " out of range");
    Graph sub(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (g.has_loop(vs[i])) sub.add_loop(i);
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (i != j && g.has_arc(vs[i], vs[j])) sub.add_arc(i, j);
    }
    return {std::move(sub), std::move(vs)};
}

std::optional<std::vector<std::size_t>> find_premise_violation(const Graph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > cap || n > 64)
        throw CapExceeded("odd-subset premise check scans 2^n subsets; n = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(std::min<std::size_t>(cap, 64)));
    if (n == 0) return std::nullopt;

    std::vector<std::uint64_t> arc_mask(n, 0);
    std::uint64_t loop_mask = 0;
    for (std::size_t v = 0; v < n; ++v) {
        const auto words = g.arcs().row(v).words();
        arc_mask[v] = words.empty() ? 0 : words[0];
        if (g.has_loop(v)) loop_mask |= std::uint64_t(1) << v;
    }

    // Subsets ordered by cardinality, then lexicographically, so the
    // first violation found is the canonical smallest witness.
    std::vector<std::size_t> idx;
    for (std::size_t k = 1; k <= n; k += 2) {
        idx.resize(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (const auto v : idx) mask |= std::uint64_t(1) << v;
            bool found_odd = false;
            for (const auto v : idx) {
                const std::size_t deg = ((loop_mask >> v) & 1) +
                                        std::size_t(std::popcount(arc_mask[v] & mask));
                if (deg % 2 == 1) {
                    found_odd = true;
                    break;
                }
            }
            if (!found_odd) return idx;

            // Advance to the next k-combination in lexicographic order.
            std::size_t i = k;
            while (i-- > 0) {
                if (idx[i] != i + n - k) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_size;
            }
        }
    next_size:;
    }
    return std::nullopt;
}

bool odd_subset_premise(const Graph& g, std::size_t cap) {
    return !find_premise_violation(g, cap).has_value();
}

std::optional<Bipartition> bipartition(const Graph& g) {
    if (!g.is_undirected())
        throw std::invalid_argument("bipartition requires an undirected graph");
    const std::size_t n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (!g.has_arc(u, v)) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (std::size_t v = 0; v < n; ++v) (color[v] == 0 ? parts.x : parts.y).push_back(v);
    return parts;
}

Graph grid_graph(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid_graph requires m, n >= 1");
    Graph g(m * n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t v = r * n + c;
            g.add_loop(v);
            if (c + 1 < n) g.add_edge(v, v + 1);
            if (r + 1 < m) g.add_edge(v, v + n);
        }
    }
    return g;
}

ActionMatrix hypercube_game(std::size_t k) {
    if (k < 1 || k > 63)
        throw std::invalid_argument("hypercube_game requires 1 <= k <= 63");
    const std::size_t lamps = (std::size_t(1) << k) - 1;
    GF2Matrix m(k, lamps);
    for (std::size_t j = 0; j < lamps; ++j) {
        const std::size_t label = j + 1;
        for (std::size_t i = 0; i < k; ++i)
            if ((label >> i) & 1) m.set(i, j, true);
    }
    return {k, lamps, std::move(m)};
}

} // namespace lamplight
