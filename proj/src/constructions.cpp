#include "pcw/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcw {

CodeWithMatrix direct_sum(const LinearCode& c1, const BitMatrix& h1, const LinearCode& c2, const BitMatrix& h2) {
    const std::size_t n1 = c1.length();
    const std::size_t n2 = c2.length();
    if (h1.cols() != n1 || h2.cols() != n2) {
        throw std::invalid_argument("matrix width does not match code length");
    }
    BitMatrix h(h1.rows() + h2.rows(), n1 + n2);
    for (std::size_t r = 0; r < h1.rows(); ++r) {
        for (auto i : h1.row(r).support()) {
            h.set(r, i);
        }
    }
    for (std::size_t r = 0; r < h2.rows(); ++r) {
        for (auto i : h2.row(r).support()) {
            h.set(h1.rows() + r, n1 + i);
        }
    }
    BitMatrix g(c1.dimension() + c2.dimension(), n1 + n2);
    for (std::size_t r = 0; r < c1.dimension(); ++r) {
        for (auto i : c1.generator().row(r).support()) {
            g.set(r, i);
        }
    }
    for (std::size_t r = 0; r < c2.dimension(); ++r) {
        for (auto i : c2.generator().row(r).support()) {
            g.set(c1.dimension() + r, n1 + i);
        }
    }
    return {LinearCode::from_generator(g), h};
}

CodeWithMatrix uu_repeat(const LinearCode& c, const BitMatrix& h) {
    const std::size_t n = c.length();
    if (h.cols() != n) {
        throw std::invalid_argument("matrix width does not match code length");
    }
    BitMatrix out(h.rows() + n, 2 * n);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (auto i : h.row(r).support()) {
            out.set(r, i);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.set(h.rows() + i, i);
        out.set(h.rows() + i, n + i);
    }
    BitMatrix g(c.dimension(), 2 * n);
    for (std::size_t r = 0; r < c.dimension(); ++r) {
        for (auto i : c.generator().row(r).support()) {
            g.set(r, i);
            g.set(r, n + i);
        }
    }
    return {LinearCode::from_generator(g), out};
}

BitMatrix weight2_chain_matrix(const Weight2Partition& p) {
    std::vector<int> owner(p.n, -1);
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        if (p.classes[c].empty()) {
            throw std::invalid_argument("empty class");
        }
        for (auto i : p.classes[c]) {
            if (i >= p.n || owner[i] != -1) {
                throw std::invalid_argument("classes must be disjoint subsets of the coordinates");
            }
            owner[i] = static_cast<int>(c);
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
        throw std::invalid_argument("classes must cover every coordinate");
    }
    BitMatrix h(0, p.n);
    for (const auto& cls : p.classes) {
        auto sorted = cls;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j + 1 < sorted.size(); ++j) {
            BitVector row(p.n);
            row.set(sorted[j]);
            row.set(sorted[j + 1]);
            h.append_row(std::move(row));
        }
    }
    if (p.anchor) {
        std::vector<bool> hit(p.classes.size(), false);
        BitVector row(p.n);
        for (auto i : *p.anchor) {
            if (i >= p.n || row.get(i)) {
                throw std::invalid_argument("bad anchor position");
            }
            const auto c = static_cast<std::size_t>(owner[i]);
            if (hit[c]) {
                throw std::invalid_argument("anchor row meets a class more than once");
            }
            hit[c] = true;
            row.set(i);
        }
        h.append_row(std::move(row));
    }
    return h;
}

namespace {

// Re-embeds a matrix of the punctured code and pins the removed coordinates with weight-1 rows.
BitMatrix unpuncture(const BitMatrix& hp, std::size_t n, const std::vector<std::size_t>& punctured) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0, p = 0; i < n; ++i) {
        if (p < punctured.size() && punctured[p] == i) {
            ++p;
        } else {
            kept.push_back(i);
        }
    }
    BitMatrix h(0, n);
    for (const auto& row : hp.row_vectors()) {
        BitVector wide(n);
        for (auto i : row.support()) {
            wide.set(kept[i]);
        }
        h.append_row(std::move(wide));
    }
    for (auto i : punctured) {
        BitVector e(n);
        e.set(i);
        h.append_row(std::move(e));
    }
    return h;
}

std::vector<std::size_t> support_of(const BitVector& v) { return v.support(); }

}  // namespace

BitMatrix dimension1_parity_check(const LinearCode& c) {
    if (c.dimension() != 1) {
        throw std::invalid_argument("dimension1_parity_check needs k = 1");
    }
    const auto p = puncture_zero_coordinates(c);
    Weight2Partition part;
    part.n = p.code.length();
    std::vector<std::size_t> all(part.n);
    for (std::size_t i = 0; i < part.n; ++i) {
        all[i] = i;
    }
    part.classes.push_back(all);
    return unpuncture(weight2_chain_matrix(part), c.length(), p.punctured);
}

BitMatrix dimension2_parity_check(const LinearCode& c) {
    if (c.dimension() != 2) {
        throw std::invalid_argument("dimension2_parity_check needs k = 2");
    }
    const auto p = puncture_zero_coordinates(c);
    const std::size_t n = p.code.length();
    auto words = p.code.codewords();
    words.erase(std::remove_if(words.begin(), words.end(), [](const BitVector& w) { return w.is_zero(); }),
                words.end());
    std::sort(words.begin(), words.end());
    BitVector c1 = words[0];
    BitVector c2 = words[1];
    auto split = [&](std::vector<std::size_t>& s1, std::vector<std::size_t>& s2, std::vector<std::size_t>& s3) {
        s1.clear();
        s2.clear();
        s3.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (c1.get(i) && !c2.get(i)) {
                s1.push_back(i);
            } else if (!c1.get(i) && c2.get(i)) {
                s2.push_back(i);
            } else if (c1.get(i) && c2.get(i)) {
                s3.push_back(i);
            }
        }
    };
    std::vector<std::size_t> s1;
    std::vector<std::size_t> s2;
    std::vector<std::size_t> s3;
    split(s1, s2, s3);
    if (s1.empty()) {
        c2 ^= c1;
    } else if (s2.empty()) {
        c1 ^= c2;
    }
    split(s1, s2, s3);
    Weight2Partition part;
    part.n = n;
    if (s3.empty()) {
        part.classes = {s1, s2};
    } else {
        part.classes = {s1, s2, s3};
        part.anchor = std::vector<std::size_t>{s1.front(), s2.front(), s3.front()};
    }
    return unpuncture(weight2_chain_matrix(part), c.length(), p.punctured);
}

std::vector<BitVector> sorted_dual_words(const LinearCode& c) {
    if (c.redundancy() > 20) {
        throw std::length_error("dual code too large to list");
    }
    auto words = c.dual().codewords();
    words.erase(std::remove_if(words.begin(), words.end(), [](const BitVector& w) { return w.is_zero(); }),
                words.end());
    std::sort(words.begin(), words.end(), [](const BitVector& a, const BitVector& b) {
        const auto wa = a.weight();
        const auto wb = b.weight();
        return wa != wb ? wa < wb : a < b;
    });
    return words;
}

BitMatrix all_dual_rows(const LinearCode& c) { return BitMatrix(sorted_dual_words(c), c.length()); }

BitMatrix dual_rows_of_weight(const LinearCode& c, std::size_t w) {
    std::vector<BitVector> rows;
    for (auto& v : sorted_dual_words(c)) {
        if (v.weight() == w) {
            rows.push_back(std::move(v));
        }
    }
    BitMatrix h(rows, c.length());
    const auto rank = h.rank();
    if (rank != c.redundancy()) {
        throw std::invalid_argument("weight-" + std::to_string(w) + " dual codewords span rank " +
                                    std::to_string(rank) + " of " + std::to_string(c.redundancy()));
    }
    return h;
}

LinearCode hamming_code(std::size_t m) {
    if (m < 2 || m > 16) {
        throw std::invalid_argument("hamming_code needs 2 <= m <= 16");
    }
    const std::size_t n = (std::size_t{1} << m) - 1;
    BitMatrix h(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < m; ++r) {
            if (((j + 1) >> r) & 1U) {
                h.set(r, j);
            }
        }
    }
    return LinearCode::from_parity_check(h);
}

LinearCode simplex_code(std::size_t m) { return hamming_code(m).dual(); }

LinearCode extend_overall_parity(const LinearCode& c) {
    const std::size_t n = c.length();
    BitMatrix g(c.dimension(), n + 1);
    for (std::size_t r = 0; r < c.dimension(); ++r) {
        const auto& row = c.generator().row(r);
        for (auto i : support_of(row)) {
            g.set(r, i);
        }
        g.set(r, n, row.weight() % 2 == 1);
    }
    return LinearCode::from_generator(g);
}

}  // namespace pcw
