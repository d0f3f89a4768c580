#include "lamplight/mikado.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lamplight/errors.hpp"

namespace lamplight {

Pattern make_pattern(std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    Pattern out;
    for (std::size_t i = 0; i < points.size();) {
        std::size_t j = i;
        while (j < points.size() && points[j] == points[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(points[i]);
        i = j;
    }
    return out;
}

Pattern pattern_xor(const Pattern& a, const Pattern& b) {
    Pattern out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

Pattern translated(const Pattern& p, std::int64_t dx, std::int64_t dy) {
    // Adding a constant offset preserves the lexicographic point order.
    Pattern out;
    out.reserve(p.size());
    for (const auto& q : p) out.push_back({q.x + dx, q.y + dy});
    return out;
}

LitSet lit_lamps(const Pattern& p) {
    std::vector<Point> hits;
    hits.reserve(p.size() * 5);
    for (const auto& q : p) {
        hits.push_back(q);
        hits.push_back({q.x + 1, q.y});
        hits.push_back({q.x - 1, q.y});
        hits.push_back({q.x, q.y + 1});
        hits.push_back({q.x, q.y - 1});
    }
    return make_pattern(std::move(hits));
}

Pattern mikado_diamond(std::size_t k) {
    if (k < 1)
        throw std::invalid_argument("mikado diamonds are 1-indexed; k >= 1 required");
    Pattern cur = {{0, 0}};
    for (std::size_t i = 1; i < k; ++i) {
        const std::int64_t s = std::int64_t(1) << (i - 1);
        const LitSet lit = lit_lamps(cur);
        const LitSet axis = make_pattern({{0, 0}, {s, 0}, {-s, 0}, {0, s}, {0, -s}});
        if (lit != axis)
            throw std::logic_error("mikado_diamond: lit set lost the axis shape at step " +
                                   std::to_string(i));
        const std::array<Point, 5> offsets = {{{0, 0}, {s, 0}, {-s, 0}, {0, s}, {0, -s}}};

        // Superposing five copies hits the old center five times, each new
        // extreme once, and the eight other boundary lamps twice; only the
        // odd-multiplicity lamps stay lit.
        std::map<Point, int> hits;
        for (const auto& off : offsets)
            for (const auto& q : lit) hits[{q.x + off.x, q.y + off.y}] += 1;
        std::map<Point, int> want;
        want[{0, 0}] = 5;
        for (const Point e : {Point{2 * s, 0}, Point{-2 * s, 0}, Point{0, 2 * s}, Point{0, -2 * s}})
            want[e] = 1;
        for (const Point b : {Point{s, 0}, Point{-s, 0}, Point{0, s}, Point{0, -s}, Point{s, s},
                              Point{s, -s}, Point{-s, s}, Point{-s, -s}})
            want[b] = 2;
        if (hits != want)
            throw std::logic_error("mikado_diamond: superposition profile broken at step " +
                                   std::to_string(i));

        Pattern next;
        for (const auto& off : offsets) next = pattern_xor(next, translated(cur, off.x, off.y));
        cur = std::move(next);
    }
    return cur;
}

Pattern erase_half(const Pattern& p) {
    // Halving even coordinates is strictly monotone, so the order survives.
    Pattern out;
    for (const auto& q : p)
        if (q.x % 2 == 0 && q.y % 2 == 0) out.push_back({q.x / 2, q.y / 2});
    return out;
}

MinLampsResult min_lamps_search(std::size_t w, std::size_t h, std::size_t area_cap) {
    if (w < 1 || h < 1)
        throw std::invalid_argument("min_lamps_search: window must be nonempty");
    const std::size_t area = w * h;
    if (area > area_cap || area > 63)
        throw CapExceeded("min_lamps_search: window area " + std::to_string(area) +
                          " exceeds cap " + std::to_string(std::min<std::size_t>(area_cap, 63)));
    // Lamps live on the window plus a one-cell border.
    const std::size_t lw = w + 2;
    const std::size_t lamp_bits = lw * (h + 2);
    if (lamp_bits > 128)
        throw CapExceeded("min_lamps_search: window shape needs " + std::to_string(lamp_bits) +
                          " lamp bits, more than the 128 supported");

    std::vector<unsigned __int128> plus(area);
    const int offs[5][2] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) {
            unsigned __int128 bits = 0;
            for (const auto& o : offs) {
                const std::size_t lx = std::size_t(std::int64_t(x) + 1 + o[0]);
                const std::size_t ly = std::size_t(std::int64_t(y) + 1 + o[1]);
                bits |= static_cast<unsigned __int128>(1) << (ly * lw + lx);
            }
            plus[y * w + x] = bits;
        }

    MinLampsResult out;
    std::vector<std::uint64_t> counts(lamp_bits + 1, 0);
    const std::uint64_t total = std::uint64_t(1) << area;
    unsigned __int128 lit = 0;
    // Gray-code walk: pattern at step i is gray = i ^ (i >> 1), and each
    // step toggles the single cell countr_zero(i).
    for (std::uint64_t i = 1; i < total; ++i) {
        lit ^= plus[std::size_t(std::countr_zero(i))];
        const std::size_t cnt = std::size_t(std::popcount(static_cast<std::uint64_t>(lit))) +
                                std::size_t(std::popcount(static_cast<std::uint64_t>(lit >> 64)));
        counts[cnt] += 1;
        if (cnt <= 5) {
            const std::uint64_t gray = i ^ (i >> 1);
            Pattern p;
            for (std::size_t cell = 0; cell < area; ++cell)
                if (gray >> cell & 1)
                    p.push_back({std::int64_t(cell % w), std::int64_t(cell / w)});
            std::sort(p.begin(), p.end());
            out.witnesses[cnt].push_back(std::move(p));
        }
    }
    for (std::size_t c = 0; c < counts.size(); ++c)
        if (counts[c] != 0) out.histogram[c] = counts[c];
    out.min_lit = out.histogram.begin()->first;
    return out;
}

Pattern diagonal_run(std::size_t r) {
    if (r < 5)
        throw std::invalid_argument("diagonal_run: cannot light exactly " + std::to_string(r) +
                                    " lamps; every count except for 1, 2, 3 and 4 needs r >= 5");
    Pattern p;
    for (std::size_t i = 0; i + 4 < r; ++i) p.push_back({std::int64_t(i), std::int64_t(i)});
    return p;
}

std::string Bitmap::to_pbm() const {
    std::string out = "P1\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            if (c != 0) out += ' ';
            out += get(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

Bitmap render(const Pattern& p, RenderMode mode) {
    const std::vector<Point> pts = mode == RenderMode::lamps ? lit_lamps(p) : p;
    if (pts.empty()) return Bitmap{1, 1, {0}};
    std::int64_t minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
    for (const auto& q : pts) {
        minx = std::min(minx, q.x);
        maxx = std::max(maxx, q.x);
        miny = std::min(miny, q.y);
        maxy = std::max(maxy, q.y);
    }
    const std::size_t width = std::size_t(maxx - minx) + 1;
    const std::size_t height = std::size_t(maxy - miny) + 1;
    Bitmap bm{width, height, std::vector<std::uint8_t>(width * height, 0)};
    for (const auto& q : pts)
        bm.pixels[std::size_t(maxy - q.y) * width + std::size_t(q.x - minx)] = 1;
    return bm;
}

} // namespace lamplight
