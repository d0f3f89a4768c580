#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lamplight {

/// Polynomial with GF(2) coefficients, bit-packed (bit i of word i/64 is
/// the coefficient of x^i). Always normalized: no stored bits above the
/// degree, so equality is word equality. The zero polynomial has no
/// degree; degree() reports it as nullopt rather than a number.
class Poly2 {
public:
    Poly2() = default;

    static Poly2 zero() { return {}; }
    static Poly2 one() { return monomial(0); }
    static Poly2 x() { return monomial(1); }
    static Poly2 monomial(std::size_t deg);
    /// From exponents with coefficient 1, e.g. {0,2} -> 1 + x^2.
    static Poly2 from_exponents(std::initializer_list<std::size_t> exps);

    bool is_zero() const { return w_.empty(); }
    std::optional<std::size_t> degree() const;
    bool coeff(std::size_t i) const;

    Poly2& operator+=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    /// Remainder of *this by d. d must be nonzero.
    Poly2 mod(const Poly2& d) const;
    /// *this times x^k.
    Poly2 shifted(std::size_t k) const;

    bool operator==(const Poly2&) const = default;

    /// Human form like "x^3 + x + 1"; "0" for zero.
    std::string to_string() const;

private:
    std::vector<std::uint64_t> w_;
    void trim();
};

/// Monic gcd by Euclid's algorithm. Errors when both inputs are zero.
/// (Over GF(2) every nonzero polynomial is already monic.)
Poly2 poly_gcd(Poly2 a, Poly2 b);

/// Substitute x -> 1 + x, reducing coefficients mod 2.
Poly2 poly_eval_shift(const Poly2& p);

/// Binary Chebyshev polynomial: p0 = 1, p1 = x, pm = x*p(m-1) + p(m-2).
Poly2 chebyshev2(std::size_t m);

} // namespace lamplight
