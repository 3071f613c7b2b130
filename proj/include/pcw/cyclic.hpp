#pragma once

#include "pcw/bit_matrix.hpp"
#include "pcw/codes.hpp"
#include "pcw/exact.hpp"
#include "pcw/poly2.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pcw {

/// Cyclic code of length n given by its check polynomial h | x^n - 1; dimension deg h.
struct CyclicCodeSpec {
    std::size_t n = 0;
    Poly2 h;

    /// Throws invalid_argument unless h divides x^n - 1.
    static CyclicCodeSpec make(std::size_t n, Poly2 h);
    [[nodiscard]] std::size_t dimension() const { return static_cast<std::size_t>(h.degree()); }
    [[nodiscard]] Poly2 generator_polynomial() const;
    /// Generator matrix from the shifts of g(x).
    [[nodiscard]] LinearCode code() const;
};

/// n x n matrix with entry (j, i) = h_{(j - i) mod n}.
[[nodiscard]] BitMatrix full_circulant(const CyclicCodeSpec& spec);

/// gcd(n, support of h) == 1.
[[nodiscard]] bool connected(const CyclicCodeSpec& spec);

/// l_i = sum_k h_k h_{(k + i) mod n}.
[[nodiscard]] std::vector<long long> autocorrelation(const CyclicCodeSpec& spec);

/// Eigenvalues of H^T H indexed by frequency j = 0..n-1 (not sorted).
[[nodiscard]] std::vector<double> circulant_spectrum(const CyclicCodeSpec& spec);

struct CirculantBound {
    double bound = 0;
    double mu1 = 0;
    double mu2 = 0;
    std::size_t w = 0;
};

/// Eigenvalue bound n (2w - mu2) / (w^2 - mu2) of the full circulant; throws when disconnected.
[[nodiscard]] CirculantBound circulant_bound(const CyclicCodeSpec& spec);

struct ScanRecord {
    std::size_t n = 0;
    Poly2 h;
    std::size_t k = 0;
    std::size_t w = 0;
    bool connected = false;
    std::optional<double> mu2;
    std::optional<double> bound;
    std::optional<std::size_t> d;
    bool sharp = false;
};

struct ScanOptions {
    std::size_t n_min = 2;
    std::size_t n_max = 73;
    /// Distances come from whichever of the code and its dual has dimension <= threshold.
    std::size_t distance_threshold = 28;
    /// When false, d is computed only for records whose bound is within the sharpness
    /// tolerance of an integer; the bound never exceeds d, so no sharp record is missed.
    bool all_distances = false;
    bool include_disconnected = false;
    unsigned workers = 1;
};

inline constexpr double sharpness_tolerance = 1e-6;

/// One record per (n, divisor h) in (n, h) order; h = 1 and h = x^n - 1 are skipped. n_max <= 250.
[[nodiscard]] std::vector<ScanRecord> scan(const ScanOptions& opts);

[[nodiscard]] std::string scan_csv_header();
[[nodiscard]] std::string scan_csv_row(const ScanRecord& r);

struct KroneckerExpansion {
    BitMatrix matrix;
    double bound = 0;
    double mu2 = 0;
};

/// H (x) J_m for a w-regular circulant H with connected Tanner graph; bound n (2w - m mu2) / (w^2 - mu2).
[[nodiscard]] KroneckerExpansion kronecker_expand(const BitMatrix& h, std::size_t m);

struct FamilyMember {
    CyclicCodeSpec spec;
    ExactRational bound;  // 3 + 1 / (2^(m-2) - 1)
};

/// The cyclic [2^m - 1, 2^m - m - 2, 4] code: a Hamming code intersected with the even-weight code.
[[nodiscard]] FamilyMember hamming_parity_family(std::size_t m);

/// Irreducible p of degree m with order 2^m - 1, least in Poly2 order.
[[nodiscard]] Poly2 primitive_polynomial(std::size_t m);

}  // namespace pcw
