#include "lamplight/matchings.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lamplight/errors.hpp"
#include "lamplight/poly2.hpp"

namespace lamplight {

namespace {

struct MatchingCounter {
    std::vector<std::uint64_t> neighbor;  // bit v set in neighbor[u] iff edge u-v
    std::uint64_t loop_mask = 0;
    std::uint64_t full = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> memo;

    std::uint64_t count(std::uint64_t covered) {
        if (covered == full) return 1;
        if (const auto it = memo.find(covered); it != memo.end()) return it->second;
        const auto v = std::size_t(std::countr_zero(~covered));
        const std::uint64_t vbit = std::uint64_t(1) << v;
        std::uint64_t total = 0;
        if (loop_mask & vbit) total += count(covered | vbit);
        for (std::uint64_t m = neighbor[v] & ~covered; m; m &= m - 1)
            total += count(covered | vbit | (std::uint64_t(1) << std::countr_zero(m)));
        memo.emplace(covered, total);
        return total;
    }
};

} // namespace

std::uint64_t enumerate_complete_matchings(const Graph& g, std::size_t cap) {
    if (!g.is_undirected())
        throw std::invalid_argument("enumerate_complete_matchings requires an undirected graph");
    const std::size_t n = g.vertex_count();
    if (n > cap || n > 64)
        throw CapExceeded("complete-matching enumeration on n = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(std::min<std::size_t>(cap, 64)));
    if (n == 0) return 1;  // the empty matching

    MatchingCounter counter;
    counter.neighbor.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const auto words = g.arcs().row(v).words();
        counter.neighbor[v] = words.empty() ? 0 : words[0];
        if (g.has_loop(v)) counter.loop_mask |= std::uint64_t(1) << v;
    }
    counter.full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    return counter.count(0);
}

int matching_parity(const Graph& g) {
    if (!g.is_undirected())
        throw std::invalid_argument("matching_parity requires an undirected graph");
    return det_mod2(adjacency(g).matrix);
}

bool grid_controllable(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid_controllable requires m, n >= 1");
    return poly_gcd(chebyshev2(m), poly_eval_shift(chebyshev2(n))) == Poly2::one();
}

int monomer_dimer_parity(std::size_t m, std::size_t n, std::size_t width_cap) {
    if (m < 1 || n < 1) throw std::invalid_argument("monomer_dimer_parity requires m, n >= 1");
    const std::size_t width = std::min(m, n);
    const std::size_t length = std::max(m, n);
    if (width > width_cap)
        throw CapExceeded("monomer-dimer frontier width " + std::to_string(width) +
                          " exceeds cap " + std::to_string(width_cap));

    // dp[s]: parity of partial tilings. While visiting cell (col, lane),
    // bit j of s means, for j >= lane, "cell (col, j) is already covered"
    // (by a dimer protruding from the previous column or from the lane
    // above); for j < lane it means "a dimer protrudes from (col, j) into
    // the next column".
    std::vector<std::uint8_t> dp(std::size_t(1) << width, 0);
    std::vector<std::uint8_t> next(dp.size(), 0);
    dp[0] = 1;
    for (std::size_t col = 0; col < length; ++col) {
        for (std::size_t lane = 0; lane < width; ++lane) {
            std::fill(next.begin(), next.end(), 0);
            const std::uint64_t bit = std::uint64_t(1) << lane;
            for (std::uint64_t s = 0; s < dp.size(); ++s) {
                if (!dp[s]) continue;
                if (s & bit) {
                    next[s ^ bit] ^= 1;  // already covered; consume the mark
                    continue;
                }
                next[s] ^= 1;  // monomer
                if (lane + 1 < width && !(s & (bit << 1))) next[s | (bit << 1)] ^= 1;  // dimer down
                if (col + 1 < length) next[s | bit] ^= 1;  // dimer into the next column
            }
            dp.swap(next);
        }
    }
    return dp[0];
}

} // namespace lamplight
