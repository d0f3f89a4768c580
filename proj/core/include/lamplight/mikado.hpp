#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lamplight {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    auto operator<=>(const Point&) const = default;
};

/// Set of pressed lattice points on the infinite board, kept sorted and
/// duplicate-free. Pressing a point twice cancels, so sets built from
/// raw lists must go through make_pattern.
using Pattern = std::vector<Point>;

/// Lit lamp positions, same canonical form as Pattern.
using LitSet = std::vector<Point>;

/// Canonicalize: sort, then keep the points of odd multiplicity.
Pattern make_pattern(std::vector<Point> points);

/// XOR of two canonical point sets (symmetric difference).
Pattern pattern_xor(const Pattern& a, const Pattern& b);

/// Translate every point by (dx, dy).
Pattern translated(const Pattern& p, std::int64_t dx, std::int64_t dy);

/// Lamps lit by a press pattern: a lamp is lit iff an odd number of
/// presses fall in its plus-neighbourhood (itself and its four orthogonal
/// neighbours). Only lamps within Chebyshev distance 1 of a press can be
/// lit, so the result is finite.
LitSet lit_lamps(const Pattern& p);

/// The k-th mikado diamond (1-indexed: diamond 1 is the single press at
/// the origin). Diamond k+1 superposes five copies of diamond k: one
/// centered and four shifted by 2^(k-1) along the axes. Each step checks
/// that the superposition cancels exactly the eight non-extreme boundary
/// lamps, leaving the center plus the four axis lamps at 2^(k-1).
Pattern mikado_diamond(std::size_t k);

/// Keep every other row and column through the origin and halve the
/// scale: { (x/2, y/2) : (x,y) pressed, x and y even }. Sends diamond k
/// to diamond k-1.
Pattern erase_half(const Pattern& p);

inline constexpr std::size_t kDefaultWindowCap = 25;

struct MinLampsResult {
    /// Smallest lit-lamp count over all nonempty patterns in the window.
    std::size_t min_lit = 0;
    /// lit-lamp count -> number of patterns achieving it.
    std::map<std::size_t, std::uint64_t> histogram;
    /// All patterns for counts <= 5, in scan order.
    std::map<std::size_t, std::vector<Pattern>> witnesses;
};

/// Exhaustive scan of all 2^(w*h) - 1 nonempty press patterns inside a
/// w-by-h window at the origin. CapExceeded when w*h > area_cap.
MinLampsResult min_lamps_search(std::size_t w, std::size_t h,
                                std::size_t area_cap = kDefaultWindowCap);

/// Pattern lighting exactly r lamps: r - 4 diagonally consecutive
/// presses {(i,i)}. Counts below five are impossible and refused.
Pattern diagonal_run(std::size_t r);

enum class RenderMode { presses, lamps };

/// Monochrome raster, row-major with row 0 at the top (largest y).
struct Bitmap {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;  // 1 = black

    bool get(std::size_t row, std::size_t col) const { return pixels[row * width + col] != 0; }

    /// Plain-text portable bitmap: "P1", dimensions, then digit rows.
    std::string to_pbm() const;
};

/// Bounding-box bitmap of the presses or of the lit lamps of p. An empty
/// point set renders as a single white pixel.
Bitmap render(const Pattern& p, RenderMode mode);

} // namespace lamplight
