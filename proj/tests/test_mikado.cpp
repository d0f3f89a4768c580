#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <stdexcept>

#include "lamplight/errors.hpp"
#include "lamplight/mikado.hpp"
#include "test_support.hpp"

using namespace lamplight;

namespace {

Pattern random_pattern(std::mt19937_64& rng, std::size_t count, std::int64_t span) {
    std::uniform_int_distribution<std::int64_t> coord(-span, span);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back({coord(rng), coord(rng)});
    return make_pattern(std::move(pts));
}

Pattern transformed(const Pattern& p, int which) {
    // the eight symmetries of the square lattice
    std::vector<Point> out;
    for (const auto& q : p) {
        const std::int64_t x = q.x, y = q.y;
        switch (which) {
            case 0: out.push_back({x, y}); break;
            case 1: out.push_back({-x, y}); break;
            case 2: out.push_back({x, -y}); break;
            case 3: out.push_back({-x, -y}); break;
            case 4: out.push_back({y, x}); break;
            case 5: out.push_back({-y, x}); break;
            case 6: out.push_back({y, -x}); break;
            default: out.push_back({-y, -x}); break;
        }
    }
    return make_pattern(std::move(out));
}

} // namespace

TEST_CASE("pattern canonicalization") {
    const Pattern p = make_pattern({{1, 0}, {0, 0}, {1, 0}, {2, 2}, {2, 2}, {2, 2}});
    CHECK(p == Pattern{{0, 0}, {2, 2}});
    CHECK(make_pattern({}).empty());
    CHECK(make_pattern({{5, -3}, {5, -3}}).empty());
}

TEST_CASE("pattern xor") {
    const Pattern a = make_pattern({{0, 0}, {1, 1}});
    const Pattern b = make_pattern({{1, 1}, {2, 2}});
    CHECK(pattern_xor(a, b) == Pattern{{0, 0}, {2, 2}});
    CHECK(pattern_xor(a, a).empty());
    CHECK(pattern_xor(a, b) == pattern_xor(b, a));
    CHECK(pattern_xor(a, {}) == a);
}

TEST_CASE("translation") {
    const Pattern p = make_pattern({{0, 0}, {3, -1}});
    CHECK(translated(p, 2, 5) == Pattern{{2, 5}, {5, 4}});
    CHECK(translated(translated(p, 7, -9), -7, 9) == p);
}

TEST_CASE("lit lamps of small patterns") {
    const LitSet one = lit_lamps({{0, 0}});
    CHECK(one == LitSet{{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}});

    // two adjacent presses: the two shared lamps go dark, six stay lit
    const LitSet two = lit_lamps(make_pattern({{0, 0}, {1, 0}}));
    CHECK(two.size() == 6);
    CHECK(two == LitSet{{-1, 0}, {0, -1}, {0, 1}, {1, -1}, {1, 1}, {2, 0}});

    CHECK(lit_lamps({}).empty());
}

TEST_CASE("lit lamps are xor-linear in the presses") {
    auto rng = testsupport::make_rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        const Pattern a = random_pattern(rng, 1 + trial % 12, 6);
        const Pattern b = random_pattern(rng, 1 + (trial * 7) % 12, 6);
        CHECK(lit_lamps(pattern_xor(a, b)) == pattern_xor(lit_lamps(a), lit_lamps(b)));
    }
}

TEST_CASE("every nonempty pattern lights at least one lamp") {
    auto rng = testsupport::make_rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const Pattern p = random_pattern(rng, 1 + trial % 10, 4);
        if (p.empty()) continue;
        CHECK_FALSE(lit_lamps(p).empty());
    }
}

TEST_CASE("diamond sizes and lit sets") {
    CHECK_THROWS_AS(mikado_diamond(0), std::invalid_argument);
    CHECK(mikado_diamond(1) == Pattern{{0, 0}});
    CHECK(mikado_diamond(2) == Pattern{{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}});
    CHECK(mikado_diamond(3).size() == 17);
    CHECK(mikado_diamond(4).size() == 61);

    for (std::size_t k = 1; k <= 10; ++k) {
        const std::int64_t s = std::int64_t(1) << (k - 1);
        const LitSet lit = lit_lamps(mikado_diamond(k));
        CHECK(lit == LitSet{{-s, 0}, {0, -s}, {0, 0}, {0, s}, {s, 0}});
    }
}

TEST_CASE("erasing every other row and column steps a diamond down") {
    CHECK(erase_half(make_pattern({{-1, 2}, {2, -4}, {3, 3}})) == Pattern{{1, -2}});
    CHECK(erase_half({}).empty());
    for (std::size_t k = 2; k <= 10; ++k)
        CHECK(erase_half(mikado_diamond(k)) == mikado_diamond(k - 1));
}

TEST_CASE("diamonds have the full dihedral symmetry") {
    for (std::size_t k = 1; k <= 8; ++k) {
        const Pattern d = mikado_diamond(k);
        for (int which = 0; which < 8; ++which) CHECK(transformed(d, which) == d);
    }
}

TEST_CASE("window search on tiny windows") {
    const auto one = min_lamps_search(1, 1);
    CHECK(one.min_lit == 5);
    CHECK(one.histogram.size() == 1);
    CHECK(one.histogram.at(5) == 1);
    REQUIRE(one.witnesses.count(5) == 1);
    CHECK(one.witnesses.at(5) == std::vector<Pattern>{{{0, 0}}});

    const auto two = min_lamps_search(2, 2);
    CHECK(two.min_lit == 5);
    CHECK(two.histogram.at(5) == 4);  // only the four single presses
    std::uint64_t patterns = 0;
    for (const auto& [count, how_many] : two.histogram) {
        CHECK(count >= 5);
        patterns += how_many;
    }
    CHECK(patterns == 15);  // every nonempty subset of the window

    const auto wide = min_lamps_search(3, 3);
    CHECK(wide.min_lit == 5);
    CHECK(wide.witnesses.at(5).size() == 10);  // nine singles and one centred diamond
    int diamonds = 0;
    for (const auto& p : wide.witnesses.at(5))
        if (p.size() == 5) {
            ++diamonds;
            CHECK(p == translated(mikado_diamond(2), 1, 1));
        }
    CHECK(diamonds == 1);
}

TEST_CASE("window search guards") {
    CHECK_THROWS_AS(min_lamps_search(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(min_lamps_search(6, 5), CapExceeded);
    // the subset masks live in one 64-bit word, whatever the cap says
    CHECK_THROWS_AS(min_lamps_search(13, 5, 100), CapExceeded);
}

TEST_CASE("diagonal runs light any count from five up") {
    CHECK_THROWS_AS(diagonal_run(0), std::invalid_argument);
    CHECK_THROWS_AS(diagonal_run(4), std::invalid_argument);
    CHECK(diagonal_run(5) == Pattern{{0, 0}});
    CHECK(diagonal_run(7) == Pattern{{0, 0}, {1, 1}, {2, 2}});
    for (std::size_t r = 5; r <= 12; ++r)
        CHECK(lit_lamps(diagonal_run(r)).size() == r);
}

TEST_CASE("rendering bitmaps") {
    const Bitmap empty = render({}, RenderMode::presses);
    CHECK(empty.width == 1);
    CHECK(empty.height == 1);
    CHECK(empty.to_pbm() == "P1\n1 1\n0\n");

    const Bitmap dot = render({{0, 0}}, RenderMode::presses);
    CHECK(dot.to_pbm() == "P1\n1 1\n1\n");

    const Bitmap plus = render({{0, 0}}, RenderMode::lamps);
    CHECK(plus.width == 3);
    CHECK(plus.height == 3);
    CHECK(plus.to_pbm() ==
          "P1\n"
          "3 3\n"
          "0 1 0\n"
          "1 1 1\n"
          "0 1 0\n");

    // row 0 is the top: a lone press above the origin lands in row 0
    const Bitmap tall = render(make_pattern({{0, 0}, {0, 3}}), RenderMode::presses);
    CHECK(tall.width == 1);
    CHECK(tall.height == 4);
    CHECK(tall.get(0, 0));
    CHECK_FALSE(tall.get(1, 0));
    CHECK(tall.get(3, 0));

    const Bitmap d2 = render(mikado_diamond(2), RenderMode::lamps);
    CHECK(d2.width == 5);
    CHECK(d2.height == 5);
    std::size_t black = 0;
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c)
            if (d2.get(r, c)) ++black;
    CHECK(black == 5);
    CHECK(d2.get(0, 2));
    CHECK(d2.get(2, 0));
    CHECK(d2.get(2, 2));
    CHECK(d2.get(2, 4));
    CHECK(d2.get(4, 2));
}
