#include "lamplight/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace lamplight {

GF2Vector GF2Vector::from_bits(std::string_view s) {
    GF2Vector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string may contain only 0 and 1");
    }
    return v;
}

GF2Vector GF2Vector::ones(std::size_t n) {
    GF2Vector v(n);
    for (auto& w : v.w_) w = ~std::uint64_t(0);
    if (n & 63) v.w_.back() &= (std::uint64_t(1) << (n & 63)) - 1;
    return v;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& o) {
    if (n_ != o.n_) throw std::invalid_argument("GF2Vector length mismatch in xor");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

std::size_t GF2Vector::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool GF2Vector::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::optional<std::size_t> GF2Vector::first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return std::nullopt;
}

std::optional<std::size_t> GF2Vector::last_set() const {
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i]) return i * 64 + 63 - std::countl_zero(w_[i]);
    return std::nullopt;
}

GF2Vector GF2Vector::slice(std::size_t lo, std::size_t hi) const {
    if (lo > hi || hi > n_) throw std::invalid_argument("bad slice bounds");
    GF2Vector out(hi - lo);
    for (std::size_t i = lo; i < hi; ++i)
        if (get(i)) out.set(i - lo, true);
    return out;
}

std::string GF2Vector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::string>& rows) {
    GF2Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        GF2Vector r = GF2Vector::from_bits(rows[i]);
        if (r.size() != m.cols()) throw std::invalid_argument("ragged row lengths");
        m.row(i) = std::move(r);
    }
    return m;
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

bool GF2Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

std::size_t GF2Matrix::diagonal_weight() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) c += get(i, i);
    return c;
}

GF2Matrix GF2Matrix::with_columns_permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != cols_) throw std::invalid_argument("permutation size mismatch");
    GF2Matrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, perm[c])) out.set(r, c, true);
    return out;
}

GF2Matrix GF2Matrix::stacked_on(const GF2Matrix& below) const {
    if (cols_ != below.cols_ && rows_ != 0 && below.rows_ != 0)
        throw std::invalid_argument("column count mismatch in stack");
    GF2Matrix out(rows_ + below.rows_, rows_ ? cols_ : below.cols_);
    for (std::size_t r = 0; r < rows_; ++r) out.row(r) = row_[r];
    for (std::size_t r = 0; r < below.rows_; ++r) out.row(rows_ + r) = below.row_[r];
    return out;
}

RrefResult rref(const GF2Matrix& m) {
    RrefResult res{m, 0, {}};
    GF2Matrix& a = res.reduced;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pivot = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot == nr) continue;
        if (pivot != r) std::swap(a.row(pivot), a.row(r));
        for (std::size_t i = 0; i < nr; ++i)
            if (i != r && a.get(i, c)) a.row(i) ^= a.row(r);
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

namespace {

// Elimination of [M | I]: rows carry their expression in terms of the
// original rows in the trailing `rows` columns.
struct TrackedRref {
    std::vector<GF2Vector> rows;          // width cols + nrows
    std::vector<std::size_t> pivot_cols;  // pivots within the first `cols` columns
};

TrackedRref tracked_rref(const GF2Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    TrackedRref t;
    t.rows.reserve(nr);
    for (std::size_t i = 0; i < nr; ++i) {
        GF2Vector aug(nc + nr);
        for (std::size_t c = 0; c < nc; ++c)
            if (m.get(i, c)) aug.set(c, true);
        aug.set(nc + i, true);
        t.rows.push_back(std::move(aug));
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pivot = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (t.rows[i].get(c)) {
                pivot = i;
                break;
            }
        if (pivot == nr) continue;
        if (pivot != r) std::swap(t.rows[pivot], t.rows[r]);
        for (std::size_t i = 0; i < nr; ++i)
            if (i != r && t.rows[i].get(c)) t.rows[i] ^= t.rows[r];
        t.pivot_cols.push_back(c);
        ++r;
    }
    return t;
}

} // namespace

std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b) {
    if (b.size() != m.cols()) throw std::invalid_argument("solve: length of b must equal matrix columns");
    const std::size_t nr = m.rows(), nc = m.cols();
    TrackedRref t = tracked_rref(m);
    GF2Vector acc(nc + nr);
    for (std::size_t c = 0; c < nc; ++c)
        if (b.get(c)) acc.set(c, true);
    for (std::size_t j = 0; j < t.pivot_cols.size(); ++j)
        if (acc.get(t.pivot_cols[j])) acc ^= t.rows[j];
    for (std::size_t c = 0; c < nc; ++c)
        if (acc.get(c)) return std::nullopt;
    return acc.slice(nc, nc + nr);
}

int det_mod2(const GF2Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_mod2: matrix must be square");
    return rref(m).rank == m.rows() ? 1 : 0;
}

bool row_space_contains(const GF2Matrix& m, const GF2Vector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("row_space_contains: length mismatch");
    return solve(m, v).has_value();
}

bool row_spaces_equal(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("row_spaces_equal: column count mismatch");
    const std::size_t ra = rref(a).rank;
    const std::size_t rb = rref(b).rank;
    if (ra != rb) return false;
    return rref(a.stacked_on(b)).rank == ra;
}

} // namespace lamplight
