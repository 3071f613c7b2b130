#include "doctest.h"
#include "pcw/bit_matrix.hpp"
#include "pcw/exact.hpp"
#include "pcw/poly2.hpp"

#include <random>
#include <set>

using namespace pcw;

namespace {

BitMatrix hamming_h() { return BitMatrix::from_strings({"1110100", "0111010", "0011101"}); }

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m.set(i, j, (rng() & 1U) != 0);
        }
    }
    return m;
}

// Trial division by every polynomial of degree 1..deg/2.
bool irreducible_by_trial(const Poly2& f) {
    const long d = f.degree();
    if (d < 1) {
        return false;
    }
    for (std::uint64_t bits = 2; bits < (std::uint64_t{1} << (d / 2 + 1)); ++bits) {
        Poly2 g;
        for (std::size_t i = 0; i < 64; ++i) {
            if ((bits >> i) & 1U) {
                g.set_coeff(i, true);
            }
        }
        if (g.degree() >= 1 && g.degree() <= d / 2 && (f % g).is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("bitvector basics") {
    auto v = BitVector::from_string("0010110");
    CHECK(v.weight() == 3);
    CHECK(v.support() == std::vector<std::size_t>{2, 4, 5});
    CHECK(v.to_string() == "0010110");
    CHECK(BitVector::from_mask(v.to_mask(), 7) == v);
    CHECK(BitVector::from_string("0100") < BitVector::from_string("1000"));
    BitVector big(130);
    big.set(129);
    big.set(3);
    CHECK(big.weight() == 2);
    CHECK(big.next_set(4) == 129);
}

TEST_CASE("rref") {
    auto id = BitMatrix::identity(3);
    auto r = rref(id);
    CHECK(r.matrix == id);
    CHECK(r.rank == 3);

    BitMatrix zero(2, 4);
    auto rz = rref(zero);
    CHECK(rz.matrix == zero);
    CHECK(rz.rank == 0);

    auto rh = rref(hamming_h());
    CHECK(rh.rank == 3);
    // by hand: 1110100 -> rows reduce to pivots at 0,1,2
    CHECK(rh.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(rh.matrix == BitMatrix::from_strings({"1001110", "0100111", "0011101"}));
}

TEST_CASE("rref idempotent and kernel property on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = 1 + rng() % 8;
        const auto c = 1 + rng() % 12;
        auto m = random_matrix(rng, r, c);
        auto once = rref(m);
        CHECK(rref(once.matrix).matrix == once.matrix);
        auto ker = kernel_basis(m);
        CHECK(ker.size() == c - once.rank);
        for (const auto& b : ker) {
            CHECK(m.multiply(b).is_zero());
        }
        if (!ker.empty()) {
            CHECK(BitMatrix(ker, c).rank() == ker.size());
        }
    }
}

TEST_CASE("kernel basis examples") {
    auto ker = kernel_basis(hamming_h());
    REQUIRE(ker.size() == 4);
    std::set<std::string> words;
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        BitVector w(7);
        for (std::size_t i = 0; i < 4; ++i) {
            if ((mask >> i) & 1U) {
                w ^= ker[i];
            }
        }
        words.insert(w.to_string());
    }
    CHECK(words.size() == 16);
    CHECK(kernel_basis(BitMatrix::identity(5)).empty());
    auto k3 = kernel_basis(BitMatrix::from_strings({"111"}));
    CHECK(k3.size() == 2);
}

TEST_CASE("integer gram") {
    auto g = integer_gram(hamming_h());
    auto h = hamming_h();
    const auto cw = h.column_weights();
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(g[i][i] == static_cast<long long>(cw[i]));
        for (std::size_t j = 0; j < 7; ++j) {
            CHECK(g[i][j] == g[j][i]);
            long long both = 0;
            for (std::size_t r = 0; r < 3; ++r) {
                both += (h.get(r, i) && h.get(r, j)) ? 1 : 0;
            }
            CHECK(g[i][j] == both);
        }
    }
    CHECK(g[2][2] == 3);
    auto ones = integer_gram(BitMatrix::from_strings({"11", "11"}));
    CHECK(ones == std::vector<std::vector<long long>>{{2, 2}, {2, 2}});
    CHECK(integer_gram(BitMatrix::identity(3)) == std::vector<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("poly2 arithmetic and formats") {
    auto f = Poly2::from_exponents({0, 1, 3});
    CHECK(f.to_string() == "x^3+x+1");
    CHECK(f.to_hex() == "b");
    CHECK(Poly2::from_hex("b") == f);
    CHECK(Poly2::from_exponents({0, 1, 2, 4}).to_hex() == "71");
    CHECK(Poly2::from_bits("1101") == f);
    auto dm = Poly2::xn_minus_1(7).divmod(f);
    CHECK(dm.remainder.is_zero());
    CHECK(dm.quotient * f == Poly2::xn_minus_1(7));
    CHECK_THROWS(Poly2::xn_minus_1(0));
}

TEST_CASE("factor x^n - 1 examples") {
    CHECK(factor_xn_minus_1(1) == std::vector<Poly2>{Poly2::from_exponents({0, 1})});
    CHECK(factor_xn_minus_1(3) ==
          std::vector<Poly2>{Poly2::from_exponents({0, 1}), Poly2::from_exponents({0, 1, 2})});
    auto f7 = factor_xn_minus_1(7);
    std::set<std::string> names;
    for (const auto& p : f7) {
        names.insert(p.to_string());
    }
    CHECK(names == std::set<std::string>{"x+1", "x^3+x+1", "x^3+x^2+1"});
}

TEST_CASE("factor x^n - 1 round trip up to 250") {
    for (std::size_t n = 1; n <= 250; ++n) {
        const auto fs = factor_xn_minus_1(n);
        Poly2 prod = Poly2::one();
        for (const auto& p : fs) {
            prod = prod * p;
            if (p.degree() <= 16) {
                CHECK(irreducible_by_trial(p));
            } else {
                CHECK(is_irreducible(p));
            }
        }
        CHECK(prod == Poly2::xn_minus_1(n));
        if (n % 2 == 1) {
            std::set<std::string> distinct;
            for (const auto& p : fs) {
                distinct.insert(p.to_hex());
            }
            CHECK(distinct.size() == fs.size());
        }
    }
}

TEST_CASE("divisors") {
    auto d3 = divisors(factor_xn_minus_1(3));
    std::set<std::string> s3;
    for (const auto& p : d3) {
        s3.insert(p.to_string());
    }
    CHECK(s3 == std::set<std::string>{"1", "x+1", "x^2+x+1", "x^3+1"});
    CHECK(divisors({Poly2::from_exponents({0, 1})}).size() == 2);
    CHECK(divisors(factor_xn_minus_1(7)).size() == 8);
    // x^2 - 1 = (x+1)^2: divisors 1, x+1, x^2+1
    CHECK(divisors(factor_xn_minus_1(2)).size() == 3);
    for (const auto& p : divisors(factor_xn_minus_1(15))) {
        CHECK(divides(p, Poly2::xn_minus_1(15)));
    }
}

TEST_CASE("exact helpers") {
    CHECK(parse_rational("25/7") == ExactRational(25, 7));
    CHECK(parse_rational("-4") == ExactRational(-4));
    CHECK(to_string(ExactRational(50, 14)) == "25/7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    std::vector<ExactInt> v{6, 0, 9};
    normalize_gcd(v);
    CHECK(v == std::vector<ExactInt>{2, 0, 3});
    CHECK(rational_rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
    auto ns = rational_null_space({{1, 1, 0}, {0, 1, -1}}, 3);
    REQUIRE(ns.size() == 1);
    CHECK((ns[0] == std::vector<ExactInt>{1, -1, -1} || ns[0] == std::vector<ExactInt>{-1, 1, 1}));
}

TEST_CASE("integer determinant") {
    CHECK(integer_determinant({{2, 1}, {1, 3}}) == 5);
    CHECK(integer_determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(integer_determinant({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 0);
    CHECK(integer_determinant({{0, 2, 1}, {1, 0, 0}, {3, 1, 1}}) == -1);
}
