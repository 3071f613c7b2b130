#include "pcw/bit_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace pcw {

namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string contains a character other than 0/1");
        }
    }
    return v;
}

BitVector BitVector::from_mask(std::uint64_t mask, std::size_t length) {
    if (length > 64) {
        throw std::invalid_argument("from_mask: length exceeds 64");
    }
    BitVector v(length);
    if (length > 0) {
        v.words_[0] = length == 64 ? mask : (mask & ((std::uint64_t{1} << length) - 1));
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= bit;
    } else {
        words_[i >> 6] &= ~bit;
    }
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto word : words_) {
        w += static_cast<std::size_t>(std::popcount(word));
    }
    return w;
}

bool BitVector::is_zero() const {
    for (auto word : words_) {
        if (word != 0) {
            return false;
        }
    }
    return true;
}

bool BitVector::parity_with(const BitVector& other) const {
    unsigned acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= static_cast<unsigned>(std::popcount(words_[i] & other.words_[i])) & 1U;
    }
    return acc != 0;
}

bool BitVector::subset_of(const BitVector& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

std::size_t BitVector::intersection_count(const BitVector& other) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        w += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return w;
}

std::size_t BitVector::next_set(std::size_t from) const {
    if (from >= length_) {
        return length_;
    }
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (word != 0) {
            const std::size_t pos = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
            return pos < length_ ? pos : length_;
        }
        if (++w >= words_.size()) {
            return length_;
        }
        word = words_[w];
    }
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = next_set(0); i < length_; i = next_set(i + 1)) {
        out.push_back(i);
    }
    return out;
}

std::uint64_t BitVector::to_mask() const {
    if (length_ > 64) {
        throw std::logic_error("to_mask: vector longer than 64");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

bool operator<(const BitVector& a, const BitVector& b) {
    if (a.length_ != b.length_) {
        return a.length_ < b.length_;
    }
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        const std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff != 0) {
            const std::uint64_t low = diff & (~diff + 1);
            return (b.words_[i] & low) != 0;
        }
    }
    return false;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::vector<BitVector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("BitMatrix: row length mismatch");
        }
    }
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("from_strings: no rows");
    }
    std::vector<BitVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        out.push_back(BitVector::from_string(r));
    }
    const std::size_t cols = out.front().size();
    return BitMatrix(std::move(out), cols);
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].get(c)) {
            v.set(r);
        }
    }
    return v;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("append_row: length mismatch");
    }
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = rows_[r].next_set(0); c < cols_; c = rows_[r].next_set(c + 1)) {
            t.set(c, r);
        }
    }
    return t;
}

BitMatrix BitMatrix::permute_columns(std::span<const std::size_t> order) const {
    if (order.size() != cols_) {
        throw std::invalid_argument("permute_columns: order size mismatch");
    }
    return select_columns(order);
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> cols) const {
    BitMatrix out(rows_.size(), cols.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (rows_[r].get(cols[i])) {
                out.set(r, i);
            }
        }
    }
    return out;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].parity_with(v)) {
            out.set(r);
        }
    }
    return out;
}

std::size_t BitMatrix::rank() const { return rref(*this).rank; }

std::vector<std::size_t> BitMatrix::column_weights() const {
    std::vector<std::size_t> w(cols_, 0);
    for (const auto& r : rows_) {
        for (std::size_t c = r.next_set(0); c < cols_; c = r.next_set(c + 1)) {
            ++w[c];
        }
    }
    return w;
}

std::vector<std::size_t> BitMatrix::row_weights() const {
    std::vector<std::size_t> w;
    w.reserve(rows_.size());
    for (const auto& r : rows_) {
        w.push_back(r.weight());
    }
    return w;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult out{m, 0, {}};
    auto& a = out.matrix;
    const std::size_t rows = a.rows();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < rows; ++c) {
        std::size_t pivot = lead;
        while (pivot < rows && !a.get(pivot, c)) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(a.row(pivot), a.row(lead));
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != lead && a.get(r, c)) {
                a.row(r) ^= a.row(lead);
            }
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.rank = lead;
    return out;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    const auto reduced = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : reduced.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(free);
        for (std::size_t r = 0; r < reduced.rank; ++r) {
            if (reduced.matrix.get(r, free)) {
                v.set(reduced.pivots[r]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

BitMatrix row_space_basis(const BitMatrix& m) {
    auto reduced = rref(m);
    std::vector<BitVector> rows(reduced.matrix.row_vectors().begin(),
                                reduced.matrix.row_vectors().begin() + static_cast<std::ptrdiff_t>(reduced.rank));
    return BitMatrix(std::move(rows), m.cols());
}

std::vector<std::vector<long long>> integer_gram(const BitMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<std::vector<long long>> l(n, std::vector<long long>(n, 0));
    for (const auto& r : m.row_vectors()) {
        const auto supp = r.support();
        for (auto i : supp) {
            for (auto j : supp) {
                ++l[i][j];
            }
        }
    }
    return l;
}

bool in_row_space(const RrefResult& basis_rref, const BitVector& v) {
    BitVector rest = v;
    for (std::size_t r = 0; r < basis_rref.rank; ++r) {
        if (rest.get(basis_rref.pivots[r])) {
            rest ^= basis_rref.matrix.row(r);
        }
    }
    return rest.is_zero();
}

}  // namespace pcw
