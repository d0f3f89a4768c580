#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lamplight/gf2.hpp"
#include "lamplight/graph.hpp"

namespace lamplight {

/// Lamp states, one bit per lamp (1 = lit).
struct LampConfig {
    GF2Vector bits;
    bool operator==(const LampConfig&) const = default;
};

/// Which buttons are pressed an odd number of times. Order-free: over
/// GF(2) only the parity of each button's press count matters.
struct PressSet {
    GF2Vector bits;
    bool operator==(const PressSet&) const = default;
};

/// Ordered presses (repetitions allowed); needed only when the order is
/// constrained, as in dark-room play.
using PressSequence = std::vector<std::size_t>;

inline LampConfig dark(std::size_t lamps) { return {GF2Vector(lamps)}; }

/// State after pressing p from `start`: start XOR (sum of the pressed
/// buttons' rows). Throws std::invalid_argument on dimension mismatch.
LampConfig apply(const ActionMatrix& a, const PressSet& p, const LampConfig& start);

/// A press set reaching `target` from dark, or nullopt when target is
/// outside the row space of a. Deterministic: free coefficients zero.
std::optional<PressSet> lightable(const ActionMatrix& a, const LampConfig& target);

/// Recursion counters reported by light_all_constructive.
struct LightAllStats {
    std::size_t recursive_calls = 0;
    std::size_t memo_hits = 0;
    std::size_t early_returns = 0;  // a sub-pressing already lit the removed vertex
    std::size_t case1_merges = 0;   // even order: XOR of all sub-pressings
    std::size_t case2_presses = 0;  // odd order: press an odd-out-degree vertex
};

/// Press set lighting every lamp, built by the inductive construction
/// rather than linear algebra: remove each vertex in turn, solve the
/// smaller graph (memoized), then combine the sub-pressings; ties are
/// broken toward the lowest vertex index throughout.
///
/// The graph must satisfy the odd-subset premise. It is checked up front
/// when vertex_count <= premise_cap (PremiseViolation carries the
/// smallest violating subset); beyond the cap the caller attests and a
/// violation is still detected if the recursion trips over it. Supports
/// up to 64 vertices (CapExceeded beyond); the result is verified by
/// apply before being returned.
PressSet light_all_constructive(const Graph& g, LightAllStats* stats = nullptr,
                                std::size_t premise_cap = kDefaultPremiseCap);

/// True iff every lamp configuration is reachable: the action matrix is
/// square and invertible over GF(2).
bool fully_controllable(const ActionMatrix& a);

inline constexpr std::size_t kDefaultRankCap = 24;

struct MaxLitResult {
    std::size_t lamps_lit = 0;
    PressSet witness;
};

/// Maximal number of simultaneously lit lamps, by scanning all 2^rank
/// row-space elements (Gray order; first maximum wins). Refuses with
/// CapExceeded when rank exceeds rank_cap.
MaxLitResult max_lit(const ActionMatrix& a, std::size_t rank_cap = kDefaultRankCap);

/// An equivalent undirected game: `graph` has symmetric adjacency with
/// exactly k loops, the same lightable configurations as g after
/// renumbering lamps by perm (position j shows original vertex perm[j]),
/// and k = max_lit of g.
struct UndirectedEquivalent {
    Graph graph;
    std::vector<std::size_t> perm;
    std::size_t k = 0;
};

/// Build the equivalent undirected game: renumber lamps so a maximal
/// lightable set comes first, reduce to the block form [[I,B],[0,0]], and
/// return the symmetric matrix [[I,B],[B^T,B^T B]] as a graph. Row-space
/// equality and the loop count are re-verified internally.
UndirectedEquivalent undirected_equivalent(const Graph& g,
                                           std::size_t rank_cap = kDefaultRankCap);

inline constexpr std::size_t kDefaultOrderCap = 10;

/// Order the presses of p so every button is pressed while its own lamp
/// is dark, starting from all-dark. For undirected bipartite graphs with
/// all loops, X-side first then Y-side (ascending) always works;
/// otherwise all |p|! orderings are tried (CapExceeded when |p| >
/// order_cap). p must light all lamps (std::invalid_argument otherwise);
/// nullopt when no ordering works.
std::optional<PressSequence> dark_only_order(const Graph& g, const PressSet& p,
                                             std::size_t order_cap = kDefaultOrderCap);

inline constexpr std::size_t kDefaultMajorityCap = 20;

/// A press set lighting strictly more than half of the lamps. Exhaustive
/// scan when buttons <= cap; beyond that, fixed-seed random sampling, and
/// CapExceeded (reporting the best weight found) if sampling fails. Every
/// lamp must be toggled by at least one button (std::invalid_argument).
PressSet majority_witness(const ActionMatrix& a, std::size_t cap = kDefaultMajorityCap);

} // namespace lamplight
