#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcw {

/// Packed vector over F2.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length);
    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits);
    /// Low `length` bits of `mask`, bit i -> entry i.
    static BitVector from_mask(std::uint64_t mask, std::size_t length);

    [[nodiscard]] std::size_t size() const { return length_; }
    [[nodiscard]] bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    [[nodiscard]] std::size_t weight() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool parity_with(const BitVector& other) const;
    /// True when every set bit of *this is also set in `other`.
    [[nodiscard]] bool subset_of(const BitVector& other) const;
    [[nodiscard]] std::size_t intersection_count(const BitVector& other) const;
    /// First set bit at or after `from`, or size() when none.
    [[nodiscard]] std::size_t next_set(std::size_t from) const;
    [[nodiscard]] std::vector<std::size_t> support() const;
    /// Entries 0..63 packed into a word (requires size() <= 64).
    [[nodiscard]] std::uint64_t to_mask() const;
    [[nodiscard]] std::string to_string() const;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }
    [[nodiscard]] std::span<std::uint64_t> words() { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;
    /// Lexicographic on entries, index 0 most significant.
    friend bool operator<(const BitVector& a, const BitVector& b);

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

struct RrefResult;

/// Dense matrix over F2, rows stored as packed BitVectors.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    explicit BitMatrix(std::vector<BitVector> rows, std::size_t cols);
    /// Builds from row strings such as {"1101", "0110"}.
    static BitMatrix from_strings(const std::vector<std::string>& rows);
    static BitMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

    [[nodiscard]] const BitVector& row(std::size_t r) const { return rows_[r]; }
    [[nodiscard]] BitVector& row(std::size_t r) { return rows_[r]; }
    [[nodiscard]] const std::vector<BitVector>& row_vectors() const { return rows_; }
    [[nodiscard]] BitVector column(std::size_t c) const;
    void append_row(BitVector row);

    [[nodiscard]] BitMatrix transpose() const;
    /// Columns taken in the order given by `order` (order[i] = source column of column i).
    [[nodiscard]] BitMatrix permute_columns(std::span<const std::size_t> order) const;
    [[nodiscard]] BitMatrix select_columns(std::span<const std::size_t> cols) const;
    /// M * v^T over F2.
    [[nodiscard]] BitVector multiply(const BitVector& v) const;
    [[nodiscard]] std::size_t rank() const;
    [[nodiscard]] std::vector<std::size_t> column_weights() const;
    [[nodiscard]] std::vector<std::size_t> row_weights() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BitMatrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over F2. Zero rows stay at the bottom.
[[nodiscard]] RrefResult rref(const BitMatrix& m);

/// Basis of {c : M c^T = 0}; one vector per free column.
[[nodiscard]] std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// The nonzero rows of rref(M), i.e. a basis of the row space.
[[nodiscard]] BitMatrix row_space_basis(const BitMatrix& m);

/// L = M^T M over the integers.
[[nodiscard]] std::vector<std::vector<long long>> integer_gram(const BitMatrix& m);

/// True when v lies in the row space spanned by `basis_rref` (a matrix in RREF).
[[nodiscard]] bool in_row_space(const RrefResult& basis_rref, const BitVector& v);

}  // namespace pcw
