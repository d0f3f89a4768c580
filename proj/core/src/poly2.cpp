#include "lamplight/poly2.hpp"

#include <bit>
#include <stdexcept>

namespace lamplight {

void Poly2::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Poly2 Poly2::monomial(std::size_t deg) {
    Poly2 p;
    p.w_.assign(deg / 64 + 1, 0);
    p.w_[deg / 64] = std::uint64_t(1) << (deg & 63);
    return p;
}

Poly2 Poly2::from_exponents(std::initializer_list<std::size_t> exps) {
    Poly2 p;
    for (auto e : exps) p += monomial(e);
    return p;
}

std::optional<std::size_t> Poly2::degree() const {
    if (w_.empty()) return std::nullopt;
    return (w_.size() - 1) * 64 + 63 - std::countl_zero(w_.back());
}

bool Poly2::coeff(std::size_t i) const {
    if (i / 64 >= w_.size()) return false;
    return (w_[i / 64] >> (i & 63)) & 1u;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
}

Poly2 Poly2::shifted(std::size_t k) const {
    if (is_zero()) return {};
    Poly2 out;
    const std::size_t wordshift = k / 64, bitshift = k & 63;
    out.w_.assign(w_.size() + wordshift + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        out.w_[i + wordshift] |= w_[i] << bitshift;
        if (bitshift) out.w_[i + wordshift + 1] |= w_[i] >> (64 - bitshift);
    }
    out.trim();
    return out;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    if (a.is_zero() || b.is_zero()) return out;
    const auto deg = *a.degree();
    for (std::size_t i = 0; i <= deg; ++i)
        if (a.coeff(i)) out += b.shifted(i);
    return out;
}

Poly2 Poly2::mod(const Poly2& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly2::mod: division by zero polynomial");
    Poly2 r = *this;
    const std::size_t dd = *d.degree();
    while (!r.is_zero() && *r.degree() >= dd) r += d.shifted(*r.degree() - dd);
    return r;
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = *degree() + 1; i-- > 0;) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

Poly2 poly_gcd(Poly2 a, Poly2 b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("poly_gcd: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly2 r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly2 poly_eval_shift(const Poly2& p) {
    if (p.is_zero()) return {};
    // Horner in (1 + x): acc <- acc*(1+x) + c_i from the top coefficient down.
    Poly2 acc;
    for (std::size_t i = *p.degree() + 1; i-- > 0;) {
        acc += acc.shifted(1);
        if (p.coeff(i)) acc += Poly2::one();
    }
    return acc;
}

Poly2 chebyshev2(std::size_t m) {
    Poly2 prev = Poly2::one();  // p0
    if (m == 0) return prev;
    Poly2 cur = Poly2::x();  // p1
    for (std::size_t i = 2; i <= m; ++i) {
        Poly2 next = cur.shifted(1) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace lamplight
