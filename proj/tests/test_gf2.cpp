#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "lamplight/gf2.hpp"
#include "test_support.hpp"

using namespace lamplight;
using testsupport::mask_to_vector;

namespace {

GF2Matrix matrix_from_strings(const std::vector<std::string>& rows) {
    return GF2Matrix::from_rows(rows);
}

GF2Vector row_combination(const GF2Matrix& m, const GF2Vector& x) {
    GF2Vector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (x.get(i)) out ^= m.row(i);
    return out;
}

GF2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::bernoulli_distribution bit(0.5);
    GF2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (bit(rng)) m.set(i, j, true);
    return m;
}

} // namespace

TEST_CASE("vector construction and bit access") {
    const auto v = GF2Vector::from_bits("10110");
    CHECK(v.size() == 5);
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.popcount() == 3);
    CHECK(v.to_string() == "10110");
    CHECK_THROWS_AS(GF2Vector::from_bits("102"), std::invalid_argument);

    GF2Vector w(5);
    CHECK(w.none());
    w.flip(2);
    CHECK(w.get(2));
    w.flip(2);
    CHECK(w.none());

    CHECK(GF2Vector::ones(7).popcount() == 7);
    CHECK(GF2Vector::ones(0).size() == 0);
}

TEST_CASE("vector first_set, last_set and slice") {
    const auto v = GF2Vector::from_bits("00101000");
    CHECK(v.first_set() == std::size_t{2});
    CHECK(v.last_set() == std::size_t{4});
    CHECK_FALSE(GF2Vector(3).first_set().has_value());
    CHECK(v.slice(2, 5).to_string() == "101");
    CHECK(v.slice(0, 0).size() == 0);
}

TEST_CASE("vector xor is an involution") {
    auto rng = testsupport::make_rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::uint64_t> d;
        const std::size_t n = 1 + trial % 130;
        auto a = mask_to_vector(std::min<std::size_t>(n, 64), d(rng));
        const auto saved = a;
        const auto b = mask_to_vector(a.size(), d(rng));
        a ^= b;
        a ^= b;
        CHECK(a == saved);
    }
}

TEST_CASE("vectors spanning several words") {
    GF2Vector v(200);
    v.set(0, true);
    v.set(63, true);
    v.set(64, true);
    v.set(199, true);
    CHECK(v.popcount() == 4);
    CHECK(v.first_set() == std::size_t{0});
    CHECK(v.last_set() == std::size_t{199});
    CHECK(v.slice(63, 66).to_string() == "110");
    GF2Vector w(200);
    w.set(64, true);
    v ^= w;
    CHECK(v.popcount() == 3);
    CHECK(v.slice(63, 66).to_string() == "100");
}

TEST_CASE("rref canonical form, rank and pivots") {
    const auto full = rref(matrix_from_strings({"110", "111", "011"}));
    CHECK(full.rank == 3);
    CHECK(full.pivot_cols == std::vector<std::size_t>{0, 1, 2});
    CHECK(full.reduced.row(0).to_string() == "100");
    CHECK(full.reduced.row(1).to_string() == "010");
    CHECK(full.reduced.row(2).to_string() == "001");

    const auto defective = rref(matrix_from_strings({"110", "011", "101"}));
    CHECK(defective.rank == 2);
    CHECK(defective.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(defective.reduced.row(0).to_string() == "101");
    CHECK(defective.reduced.row(1).to_string() == "011");
    CHECK(defective.reduced.row(2).to_string() == "000");

    const auto empty = rref(GF2Matrix(0, 4));
    CHECK(empty.rank == 0);
    CHECK(empty.pivot_cols.empty());
}

TEST_CASE("rref is idempotent") {
    auto rng = testsupport::make_rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = random_matrix(rng, 1 + trial % 9, 1 + (trial * 3) % 11);
        const auto once = rref(m);
        const auto twice = rref(once.reduced);
        CHECK(once.reduced == twice.reduced);
        CHECK(once.rank == twice.rank);
    }
}

TEST_CASE("solve finds row combinations") {
    const auto m = matrix_from_strings({"11", "01"});
    const auto x = solve(m, GF2Vector::from_bits("11"));
    REQUIRE(x.has_value());
    CHECK(x->to_string() == "10");
    CHECK(row_combination(m, *x) == GF2Vector::from_bits("11"));

    const auto wide = matrix_from_strings({"11"});
    CHECK_FALSE(solve(wide, GF2Vector::from_bits("10")).has_value());
    CHECK(solve(wide, GF2Vector::from_bits("11")).has_value());

    CHECK_THROWS_AS(solve(m, GF2Vector::from_bits("111")), std::invalid_argument);
}

TEST_CASE("solve round-trips on random systems") {
    auto rng = testsupport::make_rng(23);
    std::uniform_int_distribution<std::uint64_t> d;
    int solved = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + trial % 7, cols = 1 + (trial * 5) % 9;
        const auto m = random_matrix(rng, rows, cols);
        const auto b = mask_to_vector(cols, d(rng));
        const auto x = solve(m, b);
        if (x) {
            ++solved;
            CHECK(x->size() == rows);
            CHECK(row_combination(m, *x) == b);
        } else {
            CHECK_FALSE(row_space_contains(m, b));
        }
    }
    CHECK(solved > 0);
}

TEST_CASE("determinant mod 2") {
    CHECK(det_mod2(GF2Matrix::identity(5)) == 1);
    CHECK(det_mod2(matrix_from_strings({"11", "11"})) == 0);
    CHECK(det_mod2(matrix_from_strings({"110", "011", "101"})) == 0);
    CHECK(det_mod2(matrix_from_strings({"110", "111", "011"})) == 1);
    CHECK(det_mod2(GF2Matrix(0, 0)) == 1);
    CHECK_THROWS_AS(det_mod2(GF2Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("row space comparison") {
    const auto a = matrix_from_strings({"110", "011"});
    const auto shuffled = matrix_from_strings({"011", "110", "101"});
    CHECK(row_spaces_equal(a, shuffled));
    const auto other = matrix_from_strings({"100", "010"});
    CHECK_FALSE(row_spaces_equal(a, other));
    CHECK(row_space_contains(a, GF2Vector::from_bits("101")));
    CHECK_FALSE(row_space_contains(a, GF2Vector::from_bits("111")));
    CHECK(row_space_contains(a, GF2Vector(3)));
}

TEST_CASE("matrix transforms") {
    const auto m = matrix_from_strings({"110", "010"});
    const auto t = m.transposed();
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    CHECK(t.get(0, 0));
    CHECK(t.get(1, 1));
    CHECK_FALSE(t.get(2, 0));

    CHECK(GF2Matrix::identity(4).is_symmetric());
    CHECK_FALSE(m.is_symmetric());
    CHECK(GF2Matrix::identity(4).diagonal_weight() == 4);
    CHECK(matrix_from_strings({"01", "10"}).diagonal_weight() == 0);

    // column j of the result is column perm[j] of the input
    const auto p = m.with_columns_permuted({2, 0, 1});
    CHECK(p.row(0).to_string() == "011");
    CHECK(p.row(1).to_string() == "001");

    const auto s = m.stacked_on(matrix_from_strings({"111"}));
    CHECK(s.rows() == 3);
    CHECK(s.row(2).to_string() == "111");
}

TEST_CASE("row space is invariant under column permutation plus inverse") {
    auto rng = testsupport::make_rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t cols = 2 + trial % 6;
        const auto m = random_matrix(rng, 1 + trial % 5, cols);
        std::vector<std::size_t> perm(cols);
        for (std::size_t i = 0; i < cols; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::size_t> inverse(cols);
        for (std::size_t i = 0; i < cols; ++i) inverse[perm[i]] = i;
        const auto back = m.with_columns_permuted(perm).with_columns_permuted(inverse);
        CHECK(back == m);
    }
}
