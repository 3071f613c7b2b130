#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcw {

/// Polynomial over F2; bit i of the packed words is the coefficient of x^i.
/// Always normalized: no trailing zero words, so equality is structural.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 zero() { return {}; }
    static Poly2 one() { return monomial(0); }
    static Poly2 monomial(std::size_t degree);
    /// x^n - 1 (= x^n + 1 over F2).
    static Poly2 xn_minus_1(std::size_t n);
    /// Coefficients listed by exponent, e.g. {0, 1, 3} -> 1 + x + x^3.
    static Poly2 from_exponents(const std::vector<std::size_t>& exponents);
    /// Low-degree-first 0/1 string, e.g. "1101" -> 1 + x + x^3.
    static Poly2 from_bits(std::string_view bits);
    static Poly2 from_hex(std::string_view hex);

    [[nodiscard]] bool is_zero() const { return words_.empty(); }
    [[nodiscard]] bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const;
    [[nodiscard]] bool coeff(std::size_t i) const;
    void set_coeff(std::size_t i, bool value);
    [[nodiscard]] std::size_t weight() const;
    [[nodiscard]] std::vector<std::size_t> exponents() const;

    [[nodiscard]] Poly2 derivative() const;
    /// Square root of a polynomial whose odd coefficients all vanish.
    [[nodiscard]] Poly2 sqrt() const;

    Poly2& operator+=(const Poly2& other);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2&, const Poly2&) = default;
    /// Degree first, then coefficients from the top down.
    friend bool operator<(const Poly2& a, const Poly2& b);

    /// Human readable form such as "x^3+x+1".
    [[nodiscard]] std::string to_string() const;
    /// Hex digits, lowest nibble (coefficients 0..3) first.
    [[nodiscard]] std::string to_hex() const;

    struct DivMod;
    [[nodiscard]] DivMod divmod(const Poly2& divisor) const;

private:
    void normalize();
    std::vector<std::uint64_t> words_;
};

struct Poly2::DivMod {
    Poly2 quotient;
    Poly2 remainder;
};

[[nodiscard]] Poly2 operator%(const Poly2& a, const Poly2& m);
[[nodiscard]] Poly2 operator/(const Poly2& a, const Poly2& m);
[[nodiscard]] Poly2 gcd(Poly2 a, Poly2 b);
[[nodiscard]] Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m);
[[nodiscard]] bool divides(const Poly2& d, const Poly2& f);
[[nodiscard]] bool is_irreducible(const Poly2& f);

/// Irreducible factors with multiplicity, sorted. Distinct-degree then
/// equal-degree (Cantor-Zassenhaus) splitting after square-free reduction.
[[nodiscard]] std::vector<Poly2> factor(const Poly2& f);
[[nodiscard]] std::vector<Poly2> factor_xn_minus_1(std::size_t n);

/// All distinct monic divisors of the product of `factors`, sorted.
[[nodiscard]] std::vector<Poly2> divisors(const std::vector<Poly2>& factors);

}  // namespace pcw
