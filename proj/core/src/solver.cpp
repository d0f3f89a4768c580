#include "lamplight/solver.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "lamplight/errors.hpp"

namespace lamplight {

LampConfig apply(const ActionMatrix& a, const PressSet& p, const LampConfig& start) {
    if (a.matrix.rows() != a.buttons || a.matrix.cols() != a.lamps ||
        p.bits.size() != a.buttons || start.bits.size() != a.lamps)
        throw std::invalid_argument("apply: dimension mismatch");
    LampConfig out = start;
    for (std::size_t i = 0; i < a.buttons; ++i)
        if (p.bits.get(i)) out.bits ^= a.matrix.row(i);
    return out;
}

std::optional<PressSet> lightable(const ActionMatrix& a, const LampConfig& target) {
    if (a.matrix.rows() != a.buttons || a.matrix.cols() != a.lamps ||
        target.bits.size() != a.lamps)
        throw std::invalid_argument("lightable: dimension mismatch");
    auto x = solve(a.matrix, target.bits);
    if (!x) return std::nullopt;
    return PressSet{*std::move(x)};
}

namespace {

/// Recursive subset search over the vertices of a <= 64 vertex graph.
/// toggle[v] = lamps toggled by pressing v in the full graph.
struct LightAllSearch {
    std::vector<std::uint64_t> toggle;
    LightAllStats* stats = nullptr;
    std::unordered_map<std::uint64_t, std::uint64_t> memo;

    static std::vector<std::size_t> to_list(std::uint64_t mask) {
        std::vector<std::size_t> out;
        for (std::uint64_t m = mask; m; m &= m - 1)
            out.push_back(std::size_t(std::countr_zero(m)));
        return out;
    }

    std::uint64_t lit_by(std::uint64_t press, std::uint64_t subset) const {
        std::uint64_t lit = 0;
        for (std::uint64_t m = press; m; m &= m - 1)
            lit ^= toggle[std::size_t(std::countr_zero(m))] & subset;
        return lit;
    }

    std::uint64_t solve_subset(std::uint64_t subset) {
        if (const auto it = memo.find(subset); it != memo.end()) {
            ++stats->memo_hits;
            return it->second;
        }
        ++stats->recursive_calls;
        const std::uint64_t press = solve_uncached(subset);
        memo.emplace(subset, press);
        return press;
    }

    std::uint64_t solve_uncached(std::uint64_t subset) {
        // Single vertex: only its loop can light it.
        if ((subset & (subset - 1)) == 0) {
            const auto v = std::size_t(std::countr_zero(subset));
            if (!(toggle[v] & subset)) throw PremiseViolation({v});
            return subset;
        }

        // One sub-pressing per removed vertex, lowest index first. Each
        // lights everything except possibly the vertex it was built
        // without; if one lights that vertex too, it is the answer.
        const auto vertices = to_list(subset);
        std::vector<std::uint64_t> sub(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            sub[i] = solve_subset(subset ^ (std::uint64_t(1) << vertices[i]));
            if (lit_by(sub[i], subset) == subset) {
                ++stats->early_returns;
                return sub[i];
            }
        }

        if (vertices.size() % 2 == 0) {
            // Even order: every lamp misses exactly one of the
            // sub-pressings, so their XOR toggles it an odd number of
            // times.
            ++stats->case1_merges;
            std::uint64_t press = 0;
            for (const auto s : sub) press ^= s;
            return press;
        }

        // Odd order: press the lowest vertex of odd out-degree (it lights
        // an odd number of lamps, leaving an even number dark), then add
        // the sub-pressing of every still-dark vertex.
        ++stats->case2_presses;
        std::size_t u = vertices.size();
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (std::popcount(toggle[vertices[i]] & subset) % 2 == 1) {
                u = i;
                break;
            }
        }
        if (u == vertices.size()) throw PremiseViolation(vertices);
        const std::uint64_t lit = toggle[vertices[u]] & subset;
        if (std::popcount(lit) % 2 == 0)
            throw std::logic_error(
                "light_all_constructive: odd-out-degree press lit an even number of lamps");
        std::uint64_t press = std::uint64_t(1) << vertices[u];
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (!(lit & (std::uint64_t(1) << vertices[i]))) press ^= sub[i];
        return press;
    }
};

} // namespace

PressSet light_all_constructive(const Graph& g, LightAllStats* stats, std::size_t premise_cap) {
    const std::size_t n = g.vertex_count();
    if (n > 64)
        throw CapExceeded("light_all_constructive supports at most 64 vertices; got " +
                          std::to_string(n));
    LightAllStats local;
    LightAllStats& st = stats ? *stats : local;
    st = {};
    if (n == 0) return PressSet{GF2Vector(0)};

    if (n <= premise_cap) {
        if (auto bad = find_premise_violation(g, premise_cap)) throw PremiseViolation(*bad);
    }

    LightAllSearch search;
    search.toggle.assign(n, 0);
    search.stats = &st;
    for (std::size_t v = 0; v < n; ++v) {
        const auto words = g.arcs().row(v).words();
        search.toggle[v] = words.empty() ? 0 : words[0];
        if (g.has_loop(v)) search.toggle[v] |= std::uint64_t(1) << v;
    }

    const std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    const std::uint64_t press = search.solve_subset(full);

    PressSet out{GF2Vector(n)};
    for (std::uint64_t m = press; m; m &= m - 1)
        out.bits.set(std::size_t(std::countr_zero(m)), true);
    if (apply(adjacency(g), out, dark(n)).bits != GF2Vector::ones(n))
        throw std::logic_error("light_all_constructive: result failed the apply check");
    return out;
}

bool fully_controllable(const ActionMatrix& a) {
    if (a.buttons != a.lamps || a.matrix.rows() != a.matrix.cols())
        throw std::invalid_argument("fully_controllable: action matrix is not square");
    return det_mod2(a.matrix) == 1;
}

MaxLitResult max_lit(const ActionMatrix& a, std::size_t rank_cap) {
    const auto rr = rref(a.matrix);
    if (rr.rank > rank_cap || rr.rank >= 64)
        throw CapExceeded("max_lit scans 2^rank row-space elements; rank " +
                          std::to_string(rr.rank) + " exceeds cap " +
                          std::to_string(std::min<std::size_t>(rank_cap, 63)));

    // Gray-code walk over all combinations of the basis rows; the first
    // maximum encountered is kept, so the result is reproducible.
    GF2Vector cur(a.lamps);
    GF2Vector best = cur;
    std::size_t best_weight = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << rr.rank); ++i) {
        cur ^= rr.reduced.row(std::size_t(std::countr_zero(i)));
        if (const std::size_t w = cur.popcount(); w > best_weight) {
            best_weight = w;
            best = cur;
        }
    }

    auto x = solve(a.matrix, best);
    if (!x) throw std::logic_error("max_lit: maximal element fell outside the row space");
    PressSet witness{*std::move(x)};
    if (apply(a, witness, dark(a.lamps)).bits != best)
        throw std::logic_error("max_lit: witness failed the apply check");
    return {best_weight, std::move(witness)};
}

UndirectedEquivalent undirected_equivalent(const Graph& g, std::size_t rank_cap) {
    const ActionMatrix a = adjacency(g);
    const std::size_t n = g.vertex_count();
    const MaxLitResult ml = max_lit(a, rank_cap);
    const GF2Vector bright = apply(a, ml.witness, dark(n)).bits;
    const std::size_t k = ml.lamps_lit;

    // First renumbering: the maximal lightable set in front.
    std::vector<std::size_t> perm1;
    perm1.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        if (bright.get(j)) perm1.push_back(j);
    for (std::size_t j = 0; j < n; ++j)
        if (!bright.get(j)) perm1.push_back(j);

    const auto rr = rref(a.matrix.with_columns_permuted(perm1));
    const std::size_t r = rr.rank;
    // Maximality forces every pivot into the first k columns: a basis
    // element vanishing there would extend the lit set past k.
    for (const auto c : rr.pivot_cols)
        if (c >= k) throw std::logic_error("undirected_equivalent: pivot outside the lit block");

    // Second renumbering: pivot columns to the very front.
    std::vector<bool> is_pivot(n, false);
    for (const auto c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> perm2(rr.pivot_cols);
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) perm2.push_back(j);
    const GF2Matrix basis = rr.reduced.with_columns_permuted(perm2);

    // basis rows now read [I_r | B]; assemble [[I, B], [B^T, B^T B]].
    GF2Matrix sym(n, n);
    for (std::size_t i = 0; i < r; ++i) sym.row(i) = basis.row(i);
    for (std::size_t i = r; i < n; ++i) {
        for (std::size_t p = 0; p < r; ++p) sym.set(i, p, basis.get(p, i));
        for (std::size_t j = r; j < n; ++j) {
            bool dot = false;
            for (std::size_t p = 0; p < r; ++p) dot ^= basis.get(p, i) && basis.get(p, j);
            sym.set(i, j, dot);
        }
    }

    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) perm[j] = perm1[perm2[j]];

    if (!sym.is_symmetric())
        throw std::logic_error("undirected_equivalent: block matrix is not symmetric");
    if (sym.diagonal_weight() != k)
        throw std::logic_error("undirected_equivalent: diagonal weight differs from max lit");
    if (!row_spaces_equal(a.matrix.with_columns_permuted(perm), sym))
        throw std::logic_error("undirected_equivalent: row space changed");

    Graph out(n);
    for (std::size_t v = 0; v < n; ++v)
        if (sym.get(v, v)) out.add_loop(v);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (sym.get(u, v)) out.add_edge(u, v);
    return {std::move(out), std::move(perm), k};
}

namespace {

bool simulate_dark_only(const ActionMatrix& a, const PressSequence& seq) {
    GF2Vector config(a.lamps);
    for (const auto v : seq) {
        if (config.get(v)) return false;
        config ^= a.matrix.row(v);
    }
    return true;
}

} // namespace

std::optional<PressSequence> dark_only_order(const Graph& g, const PressSet& p,
                                             std::size_t order_cap) {
    const ActionMatrix a = adjacency(g);
    const std::size_t n = g.vertex_count();
    if (p.bits.size() != n) throw std::invalid_argument("dark_only_order: press set size mismatch");
    if (apply(a, p, dark(n)).bits != GF2Vector::ones(n))
        throw std::invalid_argument("dark_only_order: press set does not light all lamps");

    if (g.is_undirected() && g.all_loops()) {
        if (const auto parts = bipartition(g)) {
            PressSequence seq;
            for (const auto v : parts->x)
                if (p.bits.get(v)) seq.push_back(v);
            for (const auto v : parts->y)
                if (p.bits.get(v)) seq.push_back(v);
            if (!simulate_dark_only(a, seq))
                throw std::logic_error("dark_only_order: X-then-Y order failed simulation");
            return seq;
        }
    }

    std::vector<std::size_t> pressed;
    for (std::size_t v = 0; v < n; ++v)
        if (p.bits.get(v)) pressed.push_back(v);
    if (pressed.size() > order_cap)
        throw CapExceeded("dark_only_order tries |p|! orderings; |p| = " +
                          std::to_string(pressed.size()) + " exceeds cap " +
                          std::to_string(order_cap));
    // Lexicographically first working ordering, if any.
    PressSequence seq = pressed;
    do {
        if (simulate_dark_only(a, seq)) return seq;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return std::nullopt;
}

PressSet majority_witness(const ActionMatrix& a, std::size_t cap) {
    if (a.buttons == 0 || a.lamps == 0)
        throw std::invalid_argument("majority_witness: game has no buttons or no lamps");
    for (std::size_t j = 0; j < a.lamps; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < a.buttons && !any; ++i) any = a.matrix.get(i, j);
        if (!any)
            throw std::invalid_argument("majority_witness: lamp " + std::to_string(j) +
                                        " is toggled by no button");
    }

    if (a.buttons <= cap && a.buttons < 64) {
        // Exhaustive Gray-code walk; first press set reaching the true
        // maximum wins.
        GF2Vector cur(a.lamps);
        std::uint64_t best_press = 0;
        std::size_t best_weight = 0;
        for (std::uint64_t i = 1; i < (std::uint64_t(1) << a.buttons); ++i) {
            cur ^= a.matrix.row(std::size_t(std::countr_zero(i)));
            if (const std::size_t w = cur.popcount(); w > best_weight) {
                best_weight = w;
                best_press = i ^ (i >> 1);
            }
        }
        if (2 * best_weight <= a.lamps)
            throw std::logic_error("majority_witness: exhaustive maximum not above half");
        PressSet out{GF2Vector(a.buttons)};
        for (std::uint64_t m = best_press; m; m &= m - 1)
            out.bits.set(std::size_t(std::countr_zero(m)), true);
        return out;
    }

    // Too many buttons to enumerate: fixed-seed sampling. A uniform press
    // set lights each lamp with probability exactly 1/2, so failures to
    // clear half are rare; give up loudly after a fixed budget.
    std::mt19937_64 rng(0x6c616d706c69ull);
    std::size_t best_weight = 0;
    constexpr std::size_t kTrials = 4096;
    for (std::size_t t = 0; t < kTrials; ++t) {
        PressSet p{GF2Vector(a.buttons)};
        const auto words = p.bits.words();
        for (auto& w : words) w = rng();
        if (const std::size_t tail = a.buttons % 64; tail != 0)
            words[words.size() - 1] &= (std::uint64_t(1) << tail) - 1;
        const std::size_t w = apply(a, p, dark(a.lamps)).bits.popcount();
        if (2 * w > a.lamps) return p;
        best_weight = std::max(best_weight, w);
    }
    throw CapExceeded("majority_witness: no majority found in " + std::to_string(kTrials) +
                      " samples; best lit " + std::to_string(best_weight) + " of " +
                      std::to_string(a.lamps));
}

} // namespace lamplight
