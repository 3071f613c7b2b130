#include "pcw/poly2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

namespace pcw {

Poly2 Poly2::monomial(std::size_t degree) {
    Poly2 p;
    p.set_coeff(degree, true);
    return p;
}

Poly2 Poly2::xn_minus_1(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("x^n - 1 requires n >= 1");
    }
    Poly2 p = monomial(n);
    p.set_coeff(0, true);
    return p;
}

Poly2 Poly2::from_exponents(const std::vector<std::size_t>& exponents) {
    Poly2 p;
    for (auto e : exponents) {
        p.set_coeff(e, !p.coeff(e));
    }
    return p;
}

Poly2 Poly2::from_bits(std::string_view bits) {
    Poly2 p;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            p.set_coeff(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("Poly2::from_bits: invalid character");
        }
    }
    return p;
}

Poly2 Poly2::from_hex(std::string_view hex) {
    Poly2 p;
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const char c = hex[i];
        unsigned v = 0;
        if (c >= '0' && c <= '9') {
            v = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            v = static_cast<unsigned>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            v = static_cast<unsigned>(c - 'A' + 10);
        } else {
            throw std::invalid_argument("Poly2::from_hex: invalid digit");
        }
        for (unsigned b = 0; b < 4; ++b) {
            if ((v >> b) & 1U) {
                p.set_coeff(4 * i + b, true);
            }
        }
    }
    return p;
}

long Poly2::degree() const {
    if (words_.empty()) {
        return -1;
    }
    return static_cast<long>(64 * (words_.size() - 1) + 63 - static_cast<std::size_t>(std::countl_zero(words_.back())));
}

bool Poly2::coeff(std::size_t i) const {
    const std::size_t w = i >> 6;
    return w < words_.size() && ((words_[w] >> (i & 63)) & 1U);
}

void Poly2::set_coeff(std::size_t i, bool value) {
    const std::size_t w = i >> 6;
    if (value) {
        if (w >= words_.size()) {
            words_.resize(w + 1, 0);
        }
        words_[w] |= std::uint64_t{1} << (i & 63);
    } else if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t{1} << (i & 63));
        normalize();
    }
}

std::size_t Poly2::weight() const {
    std::size_t w = 0;
    for (auto x : words_) {
        w += static_cast<std::size_t>(std::popcount(x));
    }
    return w;
}

std::vector<std::size_t> Poly2::exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t x = words_[w];
        while (x != 0) {
            out.push_back(64 * w + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

Poly2 Poly2::derivative() const {
    // d/dx x^i = i x^(i-1); only odd i survive.
    Poly2 d;
    for (auto e : exponents()) {
        if (e % 2 == 1) {
            d.set_coeff(e - 1, true);
        }
    }
    return d;
}

Poly2 Poly2::sqrt() const {
    Poly2 r;
    for (auto e : exponents()) {
        if (e % 2 != 0) {
            throw std::invalid_argument("Poly2::sqrt: polynomial is not a square");
        }
        r.set_coeff(e / 2, true);
    }
    return r;
}

Poly2& Poly2::operator+=(const Poly2& other) {
    if (other.words_.size() > words_.size()) {
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    normalize();
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    Poly2 out;
    out.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t x = a.words_[i];
        while (x != 0) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(x));
            x &= x - 1;
            // XOR b shifted left by 64*i + bit.
            for (std::size_t j = 0; j < b.words_.size(); ++j) {
                out.words_[i + j] ^= b.words_[j] << bit;
                if (bit != 0) {
                    out.words_[i + j + 1] ^= b.words_[j] >> (64 - bit);
                }
            }
        }
    }
    out.normalize();
    return out;
}

bool operator<(const Poly2& a, const Poly2& b) {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) {
            return a.words_[i] < b.words_[i];
        }
    }
    return false;
}

std::string Poly2::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string s;
    auto exps = exponents();
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (!s.empty()) {
            s += '+';
        }
        if (*it == 0) {
            s += '1';
        } else if (*it == 1) {
            s += 'x';
        } else {
            s += "x^" + std::to_string(*it);
        }
    }
    return s;
}

std::string Poly2::to_hex() const {
    if (is_zero()) {
        return "0";
    }
    static constexpr char digits[] = "0123456789abcdef";
    const auto deg = static_cast<std::size_t>(degree());
    std::string s;
    for (std::size_t nib = 0; 4 * nib <= deg; ++nib) {
        unsigned v = 0;
        for (unsigned b = 0; b < 4; ++b) {
            if (coeff(4 * nib + b)) {
                v |= 1U << b;
            }
        }
        s += digits[v];
    }
    return s;
}

Poly2::DivMod Poly2::divmod(const Poly2& divisor) const {
    if (divisor.is_zero()) {
        throw std::domain_error("Poly2: division by zero");
    }
    DivMod out{{}, *this};
    const long dd = divisor.degree();
    long rd = out.remainder.degree();
    while (rd >= dd) {
        const auto shift = static_cast<std::size_t>(rd - dd);
        out.quotient.set_coeff(shift, true);
        // remainder ^= divisor << shift
        const std::size_t ws = shift >> 6;
        const unsigned bs = shift & 63;
        auto& rw = out.remainder.words_;
        for (std::size_t j = 0; j < divisor.words_.size(); ++j) {
            rw[j + ws] ^= divisor.words_[j] << bs;
            if (bs != 0 && j + ws + 1 < rw.size()) {
                rw[j + ws + 1] ^= divisor.words_[j] >> (64 - bs);
            }
        }
        out.remainder.normalize();
        rd = out.remainder.degree();
    }
    return out;
}

void Poly2::normalize() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

Poly2 operator%(const Poly2& a, const Poly2& m) { return a.divmod(m).remainder; }
Poly2 operator/(const Poly2& a, const Poly2& m) { return a.divmod(m).quotient; }

Poly2 gcd(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
        Poly2 r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m) { return (a * b) % m; }

bool divides(const Poly2& d, const Poly2& f) { return (f % d).is_zero(); }

namespace {

Poly2 x_poly() { return Poly2::monomial(1); }

/// x^(2^k) mod f.
Poly2 frobenius_power(const Poly2& f, std::size_t k) {
    Poly2 h = x_poly() % f;
    for (std::size_t i = 0; i < k; ++i) {
        h = mulmod(h, h, f);
    }
    return h;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

struct DegreeBlock {
    Poly2 product;
    std::size_t degree;
};

std::vector<DegreeBlock> distinct_degree(Poly2 f) {
    std::vector<DegreeBlock> blocks;
    Poly2 h = x_poly() % f;
    std::size_t d = 0;
    while (f.degree() >= 2 * static_cast<long>(d + 1)) {
        ++d;
        h = mulmod(h, h, f);
        Poly2 g = gcd(h + x_poly(), f);
        if (!g.is_one()) {
            blocks.push_back({g, d});
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) {
        blocks.push_back({f, static_cast<std::size_t>(f.degree())});
    }
    return blocks;
}

void equal_degree(const Poly2& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly2>& out) {
    if (static_cast<std::size_t>(g.degree()) == d) {
        out.push_back(g);
        return;
    }
    const auto n = static_cast<std::size_t>(g.degree());
    while (true) {
        Poly2 a;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() & 1U) {
                a.set_coeff(i, true);
            }
        }
        if (a.degree() < 1) {
            continue;
        }
        // Trace map a + a^2 + ... + a^(2^(d-1)) splits the degree-d factors.
        Poly2 t = a;
        Poly2 acc = a;
        for (std::size_t i = 1; i < d; ++i) {
            t = mulmod(t, t, g);
            acc += t;
        }
        Poly2 u = gcd(g, acc);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree(g / u, d, rng, out);
            return;
        }
    }
}

void factor_into(const Poly2& f, std::mt19937_64& rng, std::vector<Poly2>& out) {
    if (f.degree() <= 0) {
        return;
    }
    const Poly2 df = f.derivative();
    if (df.is_zero()) {
        std::vector<Poly2> half;
        factor_into(f.sqrt(), rng, half);
        for (const auto& p : half) {
            out.push_back(p);
            out.push_back(p);
        }
        return;
    }
    const Poly2 g = gcd(f, df);
    if (!g.is_one()) {
        factor_into(g, rng, out);
        factor_into(f / g, rng, out);
        return;
    }
    for (const auto& block : distinct_degree(f)) {
        equal_degree(block.product, block.degree, rng, out);
    }
}

}  // namespace

bool is_irreducible(const Poly2& f) {
    const long deg = f.degree();
    if (deg < 1) {
        return false;
    }
    const auto d = static_cast<std::size_t>(deg);
    if (frobenius_power(f, d) != x_poly() % f) {
        return false;
    }
    for (auto q : prime_divisors(d)) {
        if (!gcd(frobenius_power(f, d / q) + x_poly(), f).is_one()) {
            return false;
        }
    }
    return true;
}

std::vector<Poly2> factor(const Poly2& f) {
    if (f.is_zero()) {
        throw std::invalid_argument("factor: zero polynomial");
    }
    std::mt19937_64 rng(0x5eed2fac7ULL);
    std::vector<Poly2> out;
    factor_into(f, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Poly2> factor_xn_minus_1(std::size_t n) { return factor(Poly2::xn_minus_1(n)); }

std::vector<Poly2> divisors(const std::vector<Poly2>& factors) {
    std::map<Poly2, std::size_t, std::less<>> mult;
    for (const auto& f : factors) {
        ++mult[f];
    }
    std::vector<Poly2> out{Poly2::one()};
    for (const auto& [p, e] : mult) {
        std::vector<Poly2> next;
        next.reserve(out.size() * (e + 1));
        for (const auto& d : out) {
            Poly2 acc = d;
            next.push_back(acc);
            for (std::size_t i = 0; i < e; ++i) {
                acc = acc * p;
                next.push_back(acc);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace pcw
