#pragma once

#include "pcw/bit_matrix.hpp"
#include "pcw/codes.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pcw {

struct CodeWithMatrix {
    LinearCode code;
    BitMatrix matrix;
};

/// Block-diagonal parity-check matrix of C1 (+) C2.
[[nodiscard]] CodeWithMatrix direct_sum(const LinearCode& c1, const BitMatrix& h1, const LinearCode& c2,
                                        const BitMatrix& h2);

/// (u|u) code with matrix [[H, 0], [I, I]].
[[nodiscard]] CodeWithMatrix uu_repeat(const LinearCode& c, const BitMatrix& h);

/// Classes of coordinates tied together by weight-2 rows, plus an optional
/// extra row meeting each class at most once.
struct Weight2Partition {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> classes;
    std::optional<std::vector<std::size_t>> anchor;
};

/// Chain rows (i_j, i_{j+1}) inside each class, then the anchor row.
/// Throws invalid_argument for overlapping/uncovered classes or an anchor hitting a class twice.
[[nodiscard]] BitMatrix weight2_chain_matrix(const Weight2Partition& p);

/// (n-2)-row matrix of an [n,2] code whose minimum pseudoweights all equal d.
[[nodiscard]] BitMatrix dimension2_parity_check(const LinearCode& c);

/// (n-1)-row matrix of an [n,1] code built from a single chain plus weight-1 rows.
[[nodiscard]] BitMatrix dimension1_parity_check(const LinearCode& c);

/// Nonzero dual codewords sorted by weight, then lexicographically (n - k <= 20).
[[nodiscard]] std::vector<BitVector> sorted_dual_words(const LinearCode& c);

[[nodiscard]] BitMatrix all_dual_rows(const LinearCode& c);

/// Dual codewords of weight w; throws when they do not span the dual code.
[[nodiscard]] BitMatrix dual_rows_of_weight(const LinearCode& c, std::size_t w);

[[nodiscard]] LinearCode hamming_code(std::size_t m);
[[nodiscard]] LinearCode simplex_code(std::size_t m);
[[nodiscard]] LinearCode extend_overall_parity(const LinearCode& c);

}  // namespace pcw
