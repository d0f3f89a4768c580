#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lamplight {

/// Bit vector over GF(2), packed into 64-bit words. Bits past size() are
/// kept zero so equality and hashing can work on the raw words.
class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    /// Parse "1010..." with bit i taken from character i.
    static GF2Vector from_bits(std::string_view s);
    static GF2Vector ones(std::size_t n);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    GF2Vector& operator^=(const GF2Vector& o);
    friend GF2Vector operator^(GF2Vector a, const GF2Vector& b) { return a ^= b; }

    std::size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }

    /// Index of leftmost set bit, or nullopt.
    std::optional<std::size_t> first_set() const;
    /// Index of rightmost set bit, or nullopt.
    std::optional<std::size_t> last_set() const;

    /// Copy of bits [lo, hi) as a new vector.
    GF2Vector slice(std::size_t lo, std::size_t hi) const;

    bool operator==(const GF2Vector&) const = default;

    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense bit matrix over GF(2); rows are GF2Vectors of identical length.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, GF2Vector(cols)) {}

    static GF2Matrix identity(std::size_t n);
    /// Build from row bit strings, e.g. {"11","01"}.
    static GF2Matrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const GF2Vector& row(std::size_t i) const { return row_[i]; }
    GF2Vector& row(std::size_t i) { return row_[i]; }

    bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { row_[r].set(c, v); }

    bool operator==(const GF2Matrix&) const = default;

    GF2Matrix transposed() const;
    bool is_symmetric() const;
    std::size_t diagonal_weight() const;

    /// Matrix with column j equal to this matrix's column perm[j].
    GF2Matrix with_columns_permuted(const std::vector<std::size_t>& perm) const;

    /// Rows of `below` appended after the rows of this matrix.
    GF2Matrix stacked_on(const GF2Matrix& below) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GF2Vector> row_;
};

struct RrefResult {
    GF2Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form over GF(2). Pivoting scans top-to-bottom,
/// left-to-right, so the result is canonical for the row space.
RrefResult rref(const GF2Matrix& m);

/// Find x with x^T M = b, i.e. a combination of M's rows equal to b.
/// Free coefficients are set to zero; nullopt when b is outside the row
/// space. x has one bit per row of M.
std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b);

/// Determinant of a square matrix mod 2 (1 iff invertible over GF(2)).
int det_mod2(const GF2Matrix& m);

bool row_space_contains(const GF2Matrix& m, const GF2Vector& v);

/// True iff both matrices span the same space of row vectors.
bool row_spaces_equal(const GF2Matrix& a, const GF2Matrix& b);

} // namespace lamplight
