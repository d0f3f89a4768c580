#pragma once

#include <cstddef>
#include <cstdint>

#include "lamplight/graph.hpp"

namespace lamplight {

inline constexpr std::size_t kDefaultEnumCap = 24;
inline constexpr std::size_t kDefaultWidthCap = 12;

/// Exact number of complete matchings: edge subsets covering every vertex
/// exactly once, where a loop covers its own vertex (a monomer) and an
/// edge covers both ends (a dimer). Recursive enumeration that always
/// covers the lowest uncovered vertex, memoized on the covered set.
/// Undirected graphs only; CapExceeded when vertex_count > cap.
std::uint64_t enumerate_complete_matchings(const Graph& g, std::size_t cap = kDefaultEnumCap);

/// Parity of the number of complete matchings, computed independently of
/// any enumeration as det of the adjacency matrix over GF(2). Undirected
/// graphs only.
int matching_parity(const Graph& g);

/// Whether the m-by-n grid game (loops everywhere) is fully controllable,
/// decided by the polynomial criterion: gcd(p_m(x), p_n(1+x)) = 1 over
/// GF(2), with p the binary Chebyshev sequence.
bool grid_controllable(std::size_t m, std::size_t n);

/// Parity of the number of monomer-dimer tilings of the m-by-n board.
/// Frontier transfer scan: cells are visited along the longer dimension,
/// the state is one pending-dimer bit per lane of the shorter dimension,
/// and every count is kept mod 2. CapExceeded when min(m,n) > width_cap.
int monomer_dimer_parity(std::size_t m, std::size_t n, std::size_t width_cap = kDefaultWidthCap);

} // namespace lamplight
