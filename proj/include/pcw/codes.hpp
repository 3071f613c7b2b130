#pragma once

#include "pcw/bit_matrix.hpp"
#include "pcw/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pcw {

inline constexpr std::size_t default_distance_threshold = 28;

using Permutation = std::vector<std::size_t>;  // p[i] = image of coordinate i

/// Binary linear code, stored by its generator in RREF.
class LinearCode {
public:
    LinearCode() = default;
    /// Row space of `g`; the rows need not be independent.
    static LinearCode from_generator(const BitMatrix& g);
    /// ker H.
    static LinearCode from_parity_check(const BitMatrix& h);
    static LinearCode zero_code(std::size_t n);
    static LinearCode full_space(std::size_t n);

    [[nodiscard]] std::size_t length() const { return n_; }
    [[nodiscard]] std::size_t dimension() const { return generator_.rows(); }
    [[nodiscard]] std::size_t redundancy() const { return n_ - dimension(); }
    /// k x n generator in RREF (k may be 0).
    [[nodiscard]] const BitMatrix& generator() const { return generator_; }
    /// (n-k) x n parity-check matrix in RREF.
    [[nodiscard]] BitMatrix parity_check() const;
    [[nodiscard]] bool contains(const BitVector& word) const;
    [[nodiscard]] LinearCode dual() const;

    /// Minimum distance by Gray-code enumeration of the 2^k - 1 nonzero codewords.
    /// nullopt when k exceeds `threshold`. Requires k >= 1.
    [[nodiscard]] std::optional<std::size_t> min_distance(std::size_t threshold = default_distance_threshold) const;
    [[nodiscard]] std::optional<std::size_t> dual_distance(std::size_t threshold = default_distance_threshold) const;

    /// All 2^k codewords in Gray-code order starting from zero (k <= 24).
    [[nodiscard]] std::vector<BitVector> codewords() const;
    /// Codewords packed into words, n <= 64 and k <= 24.
    [[nodiscard]] std::vector<std::uint64_t> codeword_masks() const;

    /// The code C' = { (c_p(0), ..., c_p(n-1)) } with coordinates reindexed by p.
    [[nodiscard]] LinearCode permuted(const Permutation& p) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.generator_ == b.generator_;
    }

private:
    struct DistanceCache;
    std::size_t n_ = 0;
    BitMatrix generator_;
    std::shared_ptr<DistanceCache> cache_;
};

/// Weight distribution A_0..A_n by enumeration (k <= threshold).
[[nodiscard]] std::optional<std::vector<ExactInt>> weight_distribution(const LinearCode& c,
                                                                      std::size_t threshold = default_distance_threshold);

/// Weight distribution of C from that of its dual (MacWilliams identities).
[[nodiscard]] std::vector<ExactInt> macwilliams_transform(const std::vector<ExactInt>& dual_distribution,
                                                          std::size_t dual_dimension);

/// Minimum distance from whichever of C, C-perp is within the enumeration
/// threshold; the dual route goes through the MacWilliams transform.
[[nodiscard]] std::optional<std::size_t> min_distance_either_side(const LinearCode& c,
                                                                  std::size_t threshold = default_distance_threshold);

struct PunctureResult {
    LinearCode code;
    std::vector<std::size_t> punctured;  // removed coordinates, ascending
};

[[nodiscard]] PunctureResult puncture_zero_coordinates(const LinearCode& c);

/// Canonical representative of H under simultaneous row and column permutation.
[[nodiscard]] BitMatrix canonical_form(const BitMatrix& h);

/// Column-permutation invariant key of a code.
struct CodeKey {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::uint32_t> columns;  // canonical RREF columns, row 0 most significant

    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const CodeKey&, const CodeKey&) = default;
    friend auto operator<=>(const CodeKey&, const CodeKey&) = default;
};

[[nodiscard]] CodeKey code_canonical_key(const LinearCode& c);

/// Automorphism group as a stabilizer chain (base 0, 1, ..., n-1).
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(std::size_t degree, std::vector<Permutation> generators);

    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] const std::vector<Permutation>& generators() const { return generators_; }
    [[nodiscard]] std::uint64_t order() const { return order_; }
    [[nodiscard]] bool contains(const Permutation& p) const;
    /// Every group element; throws when the order exceeds `limit`.
    [[nodiscard]] std::vector<Permutation> elements(std::uint64_t limit = 5'000'000) const;

private:
    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    // transversal_[i] maps an orbit point j of the stabilizer of 0..i-1 to an element sending i to j.
    std::vector<std::vector<std::optional<Permutation>>> transversal_;
    std::uint64_t order_ = 1;
};

[[nodiscard]] Permutation compose(const Permutation& outer, const Permutation& inner);
[[nodiscard]] Permutation inverse(const Permutation& p);
[[nodiscard]] BitVector apply(const Permutation& p, const BitVector& v);

/// Column permutations mapping C onto itself (n <= 16).
[[nodiscard]] PermGroup automorphisms(const LinearCode& c);

struct EnumerationOptions {
    std::size_t min_distance = 3;
    bool forbid_zero_coordinates = true;
};

/// One representative per equivalence class of [n,k] codes meeting the options,
/// sorted by canonical key.
[[nodiscard]] std::vector<LinearCode> enumerate_codes(std::size_t n, std::size_t k, const EnumerationOptions& opts = {});

}  // namespace pcw
