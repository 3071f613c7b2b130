#include "pcw/codes.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <functional>
#include <iterator>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pcw {

struct LinearCode::DistanceCache {
    std::mutex mutex;
    std::optional<std::size_t> d;
    bool d_known = false;
    std::optional<std::size_t> d_dual;
    bool d_dual_known = false;
};

namespace {

std::size_t gray_min_weight(const BitMatrix& g) {
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    if (n <= 64) {
        std::vector<std::uint64_t> rows(k);
        for (std::size_t i = 0; i < k; ++i) {
            rows[i] = g.row(i).to_mask();
        }
        std::uint64_t word = 0;
        std::size_t best = n + 1;
        const std::uint64_t total = std::uint64_t{1} << k;
        for (std::uint64_t step = 1; step < total; ++step) {
            word ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
            const auto w = static_cast<std::size_t>(std::popcount(word));
            if (w < best) {
                best = w;
            }
        }
        return best;
    }
    BitVector word(n);
    std::size_t best = n + 1;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t step = 1; step < total; ++step) {
        word ^= g.row(static_cast<std::size_t>(std::countr_zero(step)));
        best = std::min(best, word.weight());
    }
    return best;
}

}  // namespace

LinearCode LinearCode::from_generator(const BitMatrix& g) {
    LinearCode c;
    c.n_ = g.cols();
    c.generator_ = row_space_basis(g);
    c.cache_ = std::make_shared<DistanceCache>();
    return c;
}

LinearCode LinearCode::from_parity_check(const BitMatrix& h) {
    const auto basis = kernel_basis(h);
    return from_generator(BitMatrix(basis, h.cols()));
}

LinearCode LinearCode::zero_code(std::size_t n) { return from_generator(BitMatrix(0, n)); }

LinearCode LinearCode::full_space(std::size_t n) { return from_generator(BitMatrix::identity(n)); }

BitMatrix LinearCode::parity_check() const {
    return row_space_basis(BitMatrix(kernel_basis(generator_), n_));
}

bool LinearCode::contains(const BitVector& word) const {
    if (word.size() != n_) {
        return false;
    }
    RrefResult r{generator_, generator_.rows(), {}};
    for (std::size_t i = 0; i < generator_.rows(); ++i) {
        r.pivots.push_back(generator_.row(i).next_set(0));
    }
    return in_row_space(r, word);
}

LinearCode LinearCode::dual() const { return from_generator(BitMatrix(kernel_basis(generator_), n_)); }

std::optional<std::size_t> LinearCode::min_distance(std::size_t threshold) const {
    if (dimension() == 0) {
        throw std::domain_error("minimum distance of the zero code is undefined");
    }
    if (dimension() > threshold) {
        return std::nullopt;
    }
    if (!cache_) {
        return gray_min_weight(generator_);
    }
    std::lock_guard lock(cache_->mutex);
    if (!cache_->d_known) {
        cache_->d = gray_min_weight(generator_);
        cache_->d_known = true;
    }
    return cache_->d;
}

std::optional<std::size_t> LinearCode::dual_distance(std::size_t threshold) const {
    if (redundancy() == 0) {
        throw std::domain_error("minimum distance of the zero code is undefined");
    }
    if (redundancy() > threshold) {
        return std::nullopt;
    }
    if (!cache_) {
        return gray_min_weight(BitMatrix(kernel_basis(generator_), n_));
    }
    std::lock_guard lock(cache_->mutex);
    if (!cache_->d_dual_known) {
        cache_->d_dual = gray_min_weight(BitMatrix(kernel_basis(generator_), n_));
        cache_->d_dual_known = true;
    }
    return cache_->d_dual;
}

std::vector<BitVector> LinearCode::codewords() const {
    if (dimension() > 24) {
        throw std::length_error("too many codewords to list");
    }
    std::vector<BitVector> out;
    out.reserve(std::size_t{1} << dimension());
    BitVector word(n_);
    out.push_back(word);
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << dimension()); ++step) {
        word ^= generator_.row(static_cast<std::size_t>(std::countr_zero(step)));
        out.push_back(word);
    }
    return out;
}

std::vector<std::uint64_t> LinearCode::codeword_masks() const {
    if (dimension() > 24 || n_ > 64) {
        throw std::length_error("codeword masks need n <= 64 and k <= 24");
    }
    std::vector<std::uint64_t> rows(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
        rows[i] = generator_.row(i).to_mask();
    }
    std::vector<std::uint64_t> out;
    out.reserve(std::size_t{1} << dimension());
    std::uint64_t word = 0;
    out.push_back(0);
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << dimension()); ++step) {
        word ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
        out.push_back(word);
    }
    return out;
}

LinearCode LinearCode::permuted(const Permutation& p) const {
    return from_generator(generator_.permute_columns(p));
}

std::optional<std::vector<ExactInt>> weight_distribution(const LinearCode& c, std::size_t threshold) {
    const std::size_t k = c.dimension();
    if (k > threshold) {
        return std::nullopt;
    }
    const std::size_t n = c.length();
    std::vector<std::uint64_t> counts(n + 1, 0);
    const auto& g = c.generator();
    counts[0] = 1;
    if (n <= 64) {
        std::vector<std::uint64_t> rows(k);
        for (std::size_t i = 0; i < k; ++i) {
            rows[i] = g.row(i).to_mask();
        }
        std::uint64_t word = 0;
        for (std::uint64_t step = 1; step < (std::uint64_t{1} << k); ++step) {
            word ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
            ++counts[static_cast<std::size_t>(std::popcount(word))];
        }
    } else if (n <= 128) {
        std::vector<std::uint64_t> lo(k);
        std::vector<std::uint64_t> hi(k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& row = g.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (row.get(j)) {
                    (j < 64 ? lo[i] : hi[i]) |= std::uint64_t{1} << (j % 64);
                }
            }
        }
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        for (std::uint64_t step = 1; step < (std::uint64_t{1} << k); ++step) {
            const auto r = static_cast<std::size_t>(std::countr_zero(step));
            a ^= lo[r];
            b ^= hi[r];
            ++counts[static_cast<std::size_t>(std::popcount(a) + std::popcount(b))];
        }
    } else {
        BitVector word(n);
        for (std::uint64_t step = 1; step < (std::uint64_t{1} << k); ++step) {
            word ^= g.row(static_cast<std::size_t>(std::countr_zero(step)));
            ++counts[word.weight()];
        }
    }
    return std::vector<ExactInt>(counts.begin(), counts.end());
}

std::vector<ExactInt> macwilliams_transform(const std::vector<ExactInt>& dual_distribution, std::size_t dual_dimension) {
    const std::size_t n = dual_distribution.size() - 1;
    std::vector<std::vector<ExactInt>> binom(n + 1, std::vector<ExactInt>(n + 1, 0));
    for (std::size_t a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (std::size_t b = 1; b <= a; ++b) {
            binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : ExactInt(0));
        }
    }
    const ExactInt size = ExactInt(1) << dual_dimension;
    std::vector<ExactInt> out(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        ExactInt total = 0;
        for (std::size_t j = 0; j <= n; ++j) {
            if (dual_distribution[j] == 0) {
                continue;
            }
            // Krawtchouk K_i(j)
            ExactInt kk = 0;
            for (std::size_t s = 0; s <= std::min(i, j); ++s) {
                if (i - s > n - j) {
                    continue;
                }
                const ExactInt term = binom[j][s] * binom[n - j][i - s];
                kk += (s % 2 == 0) ? term : ExactInt(-term);
            }
            total += dual_distribution[j] * kk;
        }
        if (total % size != 0) {
            throw std::logic_error("MacWilliams transform produced a non-integer count");
        }
        out[i] = total / size;
    }
    return out;
}

std::optional<std::size_t> min_distance_either_side(const LinearCode& c, std::size_t threshold) {
    if (c.dimension() == 0) {
        throw std::domain_error("minimum distance of the zero code is undefined");
    }
    if (c.dimension() <= threshold && c.dimension() <= c.redundancy()) {
        return c.min_distance(threshold);
    }
    if (c.redundancy() > threshold) {
        return c.dimension() <= threshold ? c.min_distance(threshold) : std::nullopt;
    }
    const auto dual_dist = weight_distribution(c.dual(), threshold);
    const auto dist = macwilliams_transform(*dual_dist, c.redundancy());
    for (std::size_t w = 1; w < dist.size(); ++w) {
        if (dist[w] != 0) {
            return w;
        }
    }
    throw std::logic_error("nonzero code without nonzero codewords");
}

PunctureResult puncture_zero_coordinates(const LinearCode& c) {
    const auto& g = c.generator();
    BitVector used(c.length());
    for (const auto& row : g.row_vectors()) {
        used |= row;
    }
    std::vector<std::size_t> keep;
    PunctureResult out;
    for (std::size_t i = 0; i < c.length(); ++i) {
        (used.get(i) ? keep : out.punctured).push_back(i);
    }
    out.code = LinearCode::from_generator(g.select_columns(keep));
    return out;
}

// ---------------------------------------------------------------------------
// canonical_form: minimal column-major image under row and column permutations.

namespace {

struct MatrixCanon {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<BitVector> columns;            // original columns, length m
    std::vector<BitVector> best;  // best column strings found so far
    std::size_t best_valid = 0;   // entries of `best` that are meaningful

    // classes: ordered partition of row indices
    void search(std::size_t depth, const std::vector<std::vector<std::size_t>>& classes, std::vector<bool>& used,
                bool equal_prefix) {
        if (depth == n) {
            return;
        }
        // image string of each candidate column under the current classes
        std::vector<std::pair<BitVector, std::size_t>> candidates;
        std::set<BitVector> seen;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || !seen.insert(columns[c]).second) {
                continue;
            }
            BitVector img(m);
            std::size_t pos = 0;
            for (const auto& cls : classes) {
                std::size_t ones = 0;
                for (auto r : cls) {
                    ones += columns[c].get(r) ? 1 : 0;
                }
                pos += cls.size() - ones;
                for (std::size_t t = 0; t < ones; ++t) {
                    img.set(pos++);
                }
            }
            candidates.emplace_back(std::move(img), c);
        }
        BitVector min_img = candidates.front().first;
        for (const auto& [img, c] : candidates) {
            if (img < min_img) {
                min_img = img;
            }
        }
        if (equal_prefix && depth < best_valid) {
            if (best[depth] < min_img) {
                return;
            }
            if (min_img < best[depth]) {
                equal_prefix = false;
            }
        } else {
            equal_prefix = false;
        }
        if (!equal_prefix) {
            best[depth] = min_img;
            best_valid = depth + 1;
        }
        for (const auto& [img, c] : candidates) {
            if (!(img == min_img)) {
                continue;
            }
            // Re-check against best: a sibling subtree may have lowered it.
            if (best_valid <= depth || !(best[depth] == min_img)) {
                continue;
            }
            std::vector<std::vector<std::size_t>> refined;
            for (const auto& cls : classes) {
                std::vector<std::size_t> zeros;
                std::vector<std::size_t> ones;
                for (auto r : cls) {
                    (columns[c].get(r) ? ones : zeros).push_back(r);
                }
                if (!zeros.empty()) {
                    refined.push_back(std::move(zeros));
                }
                if (!ones.empty()) {
                    refined.push_back(std::move(ones));
                }
            }
            used[c] = true;
            search(depth + 1, refined, used, true);
            used[c] = false;
        }
    }
};

}  // namespace

BitMatrix canonical_form(const BitMatrix& h) {
    MatrixCanon s;
    s.m = h.rows();
    s.n = h.cols();
    if (s.m == 0 || s.n == 0) {
        return h;
    }
    for (std::size_t c = 0; c < s.n; ++c) {
        s.columns.push_back(h.column(c));
    }
    s.best.assign(s.n, BitVector(s.m));
    std::vector<std::size_t> all(s.m);
    std::iota(all.begin(), all.end(), 0);
    std::vector<bool> used(s.n, false);
    s.search(0, {all}, used, false);
    BitMatrix out(s.m, s.n);
    for (std::size_t c = 0; c < s.n; ++c) {
        for (std::size_t r = 0; r < s.m; ++r) {
            if (s.best[c].get(r)) {
                out.set(r, c);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// code_canonical_key: lexicographically least RREF column sequence over column orders.

namespace {

struct BasisState {
    // Fully reduced basis over F2^k: each vector has a unique leading bit that no other vector contains.
    std::vector<std::uint32_t> vec;
    std::vector<std::uint32_t> lead;
    std::vector<std::uint32_t> comb;  // pivot indices combining to vec
};

struct CodeCanon {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::uint32_t> columns;
    std::vector<std::uint32_t> best;
    std::size_t best_valid = 0;

    [[nodiscard]] std::uint32_t encode_pivot(std::size_t p) const {
        return std::uint32_t{1} << (k - 1 - p);
    }

    [[nodiscard]] std::uint32_t encode_comb(std::uint32_t comb) const {
        std::uint32_t e = 0;
        while (comb != 0) {
            const auto p = static_cast<std::size_t>(std::countr_zero(comb));
            e |= encode_pivot(p);
            comb &= comb - 1;
        }
        return e;
    }

    // Returns (encoded column, residual, comb of reduction)
    struct Reduced {
        std::uint32_t code;
        std::uint32_t residual;
        std::uint32_t comb;
    };

    [[nodiscard]] Reduced reduce(const BasisState& b, std::uint32_t v) const {
        std::uint32_t comb = 0;
        for (std::size_t i = 0; i < b.vec.size(); ++i) {
            if ((v & b.lead[i]) != 0) {
                v ^= b.vec[i];
                comb ^= b.comb[i];
            }
        }
        if (v != 0) {
            return {encode_pivot(b.vec.size()), v, comb};
        }
        return {encode_comb(comb), 0, comb};
    }

    void search(std::size_t depth, const BasisState& basis, std::vector<bool>& used, bool equal_prefix) {
        if (depth == n) {
            return;
        }
        std::vector<std::pair<Reduced, std::size_t>> candidates;
        std::vector<std::uint32_t> seen;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || std::find(seen.begin(), seen.end(), columns[c]) != seen.end()) {
                continue;
            }
            seen.push_back(columns[c]);
            candidates.emplace_back(reduce(basis, columns[c]), c);
        }
        std::uint32_t min_code = candidates.front().first.code;
        for (const auto& [r, c] : candidates) {
            min_code = std::min(min_code, r.code);
        }
        if (equal_prefix && depth < best_valid) {
            if (best[depth] < min_code) {
                return;
            }
            if (min_code < best[depth]) {
                equal_prefix = false;
            }
        } else {
            equal_prefix = false;
        }
        if (!equal_prefix) {
            best[depth] = min_code;
            best_valid = depth + 1;
        }
        for (const auto& [r, c] : candidates) {
            if (r.code != min_code || best_valid <= depth || best[depth] != min_code) {
                continue;
            }
            used[c] = true;
            if (r.residual != 0) {
                BasisState next = basis;
                const std::uint32_t lead = std::uint32_t{1} << (31 - std::countl_zero(r.residual));
                const std::uint32_t comb = r.comb ^ (std::uint32_t{1} << basis.vec.size());
                for (std::size_t i = 0; i < next.vec.size(); ++i) {
                    if ((next.vec[i] & lead) != 0) {
                        next.vec[i] ^= r.residual;
                        next.comb[i] ^= comb;
                    }
                }
                next.vec.push_back(r.residual);
                next.lead.push_back(lead);
                next.comb.push_back(comb);
                search(depth + 1, next, used, true);
            } else {
                search(depth + 1, basis, used, true);
            }
            used[c] = false;
        }
    }
};

}  // namespace

std::string CodeKey::to_string() const {
    std::string out = std::to_string(n) + ":" + std::to_string(k) + ":";
    char buf[16];
    for (std::size_t i = 0; i < columns.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%x", i == 0 ? "" : ".", columns[i]);
        out += buf;
    }
    return out;
}

CodeKey code_canonical_key(const LinearCode& c) {
    CodeKey key;
    key.n = c.length();
    key.k = c.dimension();
    if (key.k == 0) {
        key.columns.assign(key.n, 0);
        return key;
    }
    if (key.k > 32) {
        throw std::length_error("canonical key supports k <= 32");
    }
    CodeCanon s;
    s.n = key.n;
    s.k = key.k;
    s.columns.assign(s.n, 0);
    for (std::size_t col = 0; col < s.n; ++col) {
        for (std::size_t r = 0; r < s.k; ++r) {
            if (c.generator().get(r, col)) {
                s.columns[col] |= std::uint32_t{1} << r;
            }
        }
    }
    s.best.assign(s.n, 0);
    std::vector<bool> used(s.n, false);
    s.search(0, BasisState{}, used, false);
    key.columns = std::move(s.best);
    return key;
}

// ---------------------------------------------------------------------------
// Permutation groups

Permutation compose(const Permutation& outer, const Permutation& inner) {
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
        out[i] = outer[inner[i]];
    }
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[p[i]] = i;
    }
    return out;
}

BitVector apply(const Permutation& p, const BitVector& v) {
    BitVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.get(i)) {
            out.set(p[i]);
        }
    }
    return out;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), transversal_(degree) {
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0);
    order_ = 1;
    for (std::size_t level = 0; level < degree; ++level) {
        // Generators fixing 0..level-1 pointwise generate the stabilizer when
        // the set is a strong generating set for base 0..n-1.
        std::vector<const Permutation*> gens;
        for (const auto& g : generators_) {
            bool fixes = true;
            for (std::size_t i = 0; i < level && fixes; ++i) {
                fixes = g[i] == i;
            }
            if (fixes) {
                gens.push_back(&g);
            }
        }
        auto& t = transversal_[level];
        t.assign(degree, std::nullopt);
        t[level] = id;
        std::vector<std::size_t> queue{level};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t pt = queue[head];
            for (const auto* g : gens) {
                const std::size_t img = (*g)[pt];
                if (!t[img]) {
                    t[img] = compose(*g, *t[pt]);
                    queue.push_back(img);
                }
            }
        }
        order_ *= queue.size();
    }
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.size() != degree_) {
        return false;
    }
    Permutation cur = p;
    for (std::size_t level = 0; level < degree_; ++level) {
        const auto& u = transversal_[level][cur[level]];
        if (!u) {
            return false;
        }
        cur = compose(inverse(*u), cur);
    }
    return true;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
    if (order_ > limit) {
        throw std::length_error("group too large to list");
    }
    std::vector<Permutation> out;
    Permutation id(degree_);
    std::iota(id.begin(), id.end(), 0);
    std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t level, const Permutation& acc) {
        if (level == degree_) {
            out.push_back(acc);
            return;
        }
        for (const auto& u : transversal_[level]) {
            if (u) {
                rec(level + 1, compose(acc, *u));
            }
        }
    };
    rec(0, id);
    return out;
}

namespace {

struct AutSearch {
    std::size_t n = 0;
    std::vector<bool> in_code;
    std::vector<bool> in_dual;
    std::vector<std::vector<std::size_t>> invariant;  // per coordinate
    // rep[t]: a word with highest support index t (bit t set, support within 0..t), or 0
    std::vector<std::uint32_t> code_rep;
    std::vector<std::uint32_t> dual_rep;

    [[nodiscard]] static std::uint32_t image(std::uint32_t w, const std::vector<std::size_t>& p) {
        std::uint32_t out = 0;
        while (w != 0) {
            const auto i = static_cast<std::size_t>(std::countr_zero(w));
            out |= std::uint32_t{1} << p[i];
            w &= w - 1;
        }
        return out;
    }

    // Finds sigma with sigma(i) = i for i < level and sigma(level) = target.
    std::optional<Permutation> find(std::size_t level, std::size_t target) {
        Permutation p(n, 0);
        std::vector<bool> taken(n, false);
        for (std::size_t i = 0; i < level; ++i) {
            p[i] = i;
            taken[i] = true;
        }
        if (taken[target] || invariant[level] != invariant[target]) {
            return std::nullopt;
        }
        // prefix checks for positions < level hold for the identity
        p[level] = target;
        taken[target] = true;
        if (!consistent(level, p)) {
            return std::nullopt;
        }
        if (extend(level + 1, p, taken)) {
            return p;
        }
        return std::nullopt;
    }

    [[nodiscard]] bool consistent(std::size_t pos, const Permutation& p) const {
        if (code_rep[pos] != 0 && !in_code[image(code_rep[pos], p)]) {
            return false;
        }
        if (dual_rep[pos] != 0 && !in_dual[image(dual_rep[pos], p)]) {
            return false;
        }
        return true;
    }

    bool extend(std::size_t pos, Permutation& p, std::vector<bool>& taken) {
        if (pos == n) {
            return true;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (taken[v] || invariant[pos] != invariant[v]) {
                continue;
            }
            p[pos] = v;
            if (!consistent(pos, p)) {
                continue;
            }
            taken[v] = true;
            if (extend(pos + 1, p, taken)) {
                return true;
            }
            taken[v] = false;
        }
        return false;
    }
};

}  // namespace

PermGroup automorphisms(const LinearCode& c) {
    const std::size_t n = c.length();
    if (n > 16) {
        throw std::length_error("automorphism search supports n <= 16");
    }
    AutSearch s;
    s.n = n;
    const auto words = c.codeword_masks();
    const auto dual_words = c.dual().codeword_masks();
    s.in_code.assign(std::size_t{1} << n, false);
    s.in_dual.assign(std::size_t{1} << n, false);
    s.invariant.assign(n, std::vector<std::size_t>(2 * (n + 1), 0));
    s.code_rep.assign(n, 0);
    s.dual_rep.assign(n, 0);
    auto record = [&](const std::vector<std::uint64_t>& list, std::vector<bool>& member,
                      std::vector<std::uint32_t>& rep, std::size_t offset) {
        for (auto w64 : list) {
            const auto w = static_cast<std::uint32_t>(w64);
            member[w] = true;
            if (w == 0) {
                continue;
            }
            const auto weight = static_cast<std::size_t>(std::popcount(w));
            for (auto b = w; b != 0; b &= b - 1) {
                ++s.invariant[static_cast<std::size_t>(std::countr_zero(b))][offset + weight];
            }
            const auto top = static_cast<std::size_t>(31 - std::countl_zero(w));
            if (rep[top] == 0) {
                rep[top] = w;
            }
        }
    };
    record(words, s.in_code, s.code_rep, 0);
    record(dual_words, s.in_dual, s.dual_rep, n + 1);

    std::vector<Permutation> gens;
    for (std::size_t level = n; level-- > 0;) {
        // orbit of `level` under the generators found so far (all fix 0..level-1)
        while (true) {
            std::vector<bool> in_orbit(n, false);
            in_orbit[level] = true;
            std::vector<std::size_t> queue{level};
            for (std::size_t head = 0; head < queue.size(); ++head) {
                for (const auto& g : gens) {
                    const auto img = g[queue[head]];
                    if (!in_orbit[img]) {
                        in_orbit[img] = true;
                        queue.push_back(img);
                    }
                }
            }
            bool added = false;
            for (std::size_t target = level + 1; target < n && !added; ++target) {
                if (in_orbit[target]) {
                    continue;
                }
                if (auto p = s.find(level, target)) {
                    gens.push_back(std::move(*p));
                    added = true;
                }
            }
            if (!added) {
                break;
            }
        }
    }
    return PermGroup(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Calls f(matrix) for every t x n matrix in RREF of rank t.
template <class F>
void for_each_rref(std::size_t t, std::size_t n, F&& f) {
    std::vector<std::size_t> piv(t);
    std::iota(piv.begin(), piv.end(), 0);
    if (t > n) {
        return;
    }
    while (true) {
        // free positions: row i may have ones in non-pivot columns after piv[i]
        std::vector<std::pair<std::size_t, std::size_t>> free;
        std::vector<bool> is_piv(n, false);
        for (auto p : piv) {
            is_piv[p] = true;
        }
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t c = piv[i] + 1; c < n; ++c) {
                if (!is_piv[c]) {
                    free.emplace_back(i, c);
                }
            }
        }
        std::vector<std::uint64_t> rows(t);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
            for (std::size_t i = 0; i < t; ++i) {
                rows[i] = std::uint64_t{1} << piv[i];
            }
            for (std::size_t b = 0; b < free.size(); ++b) {
                if ((mask >> b) & 1U) {
                    rows[free[b].first] |= std::uint64_t{1} << free[b].second;
                }
            }
            f(rows);
        }
        // next pivot combination
        std::size_t i = t;
        while (i > 0 && piv[i - 1] == n - t + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++piv[i - 1];
        for (std::size_t j = i; j < t; ++j) {
            piv[j] = piv[j - 1] + 1;
        }
    }
}

std::size_t min_weight_masks(const std::vector<std::uint64_t>& rows) {
    std::uint64_t word = 0;
    std::size_t best = 64;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << rows.size()); ++step) {
        word ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
        best = std::min(best, static_cast<std::size_t>(std::popcount(word)));
    }
    return best;
}

// RREF of small row masks, rows concatenated into one word (t * n <= 64).
std::uint64_t packed_rref(std::vector<std::uint64_t> rows, std::size_t n) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        std::size_t p = rank;
        while (p < rows.size() && (rows[p] & bit) == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r] & bit) != 0) {
                rows[r] ^= rows[rank];
            }
        }
        ++rank;
    }
    std::uint64_t packed = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        packed |= rows[r] << (r * n);
    }
    return packed;
}

BitMatrix matrix_from_masks(const std::vector<std::uint64_t>& rows, std::size_t n) {
    BitMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m.row(i) = BitVector::from_mask(rows[i], n);
    }
    return m;
}

}  // namespace

std::vector<LinearCode> enumerate_codes(std::size_t n, std::size_t k, const EnumerationOptions& opts) {
    if (n > 30 || k > n) {
        throw std::invalid_argument("enumerate_codes requires k <= n <= 30");
    }
    const std::size_t r = n - k;
    const bool via_dual = k > r;
    const std::size_t t = via_dual ? r : k;
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::set<CodeKey> keys;
    std::vector<LinearCode> reps;
    // Small cases: mark the RREF of every column permutation of each new class,
    // so later members of the class are rejected by lookup.
    const bool mark_orbits = t * n <= 64 && n <= 10;
    std::vector<std::uint64_t> visited;  // sorted
    auto claim = [&](const std::vector<std::uint64_t>& rows, const LinearCode& spanned) {
        if (!mark_orbits) {
            return keys.insert(code_canonical_key(spanned)).second;
        }
        if (std::binary_search(visited.begin(), visited.end(), packed_rref(rows, n))) {
            return false;
        }
        Permutation p(n);
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::uint64_t> orbit;
        std::vector<std::uint64_t> moved(rows.size());
        do {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                std::uint64_t m = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    m |= ((rows[i] >> c) & 1U) << p[c];
                }
                moved[i] = m;
            }
            orbit.push_back(packed_rref(moved, n));
        } while (std::next_permutation(p.begin(), p.end()));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        std::vector<std::uint64_t> merged;
        merged.reserve(visited.size() + orbit.size());
        std::merge(visited.begin(), visited.end(), orbit.begin(), orbit.end(), std::back_inserter(merged));
        visited = std::move(merged);
        return true;
    };
    for_each_rref(t, n, [&](const std::vector<std::uint64_t>& rows) {
        if (!via_dual) {
            // rows generate C
            std::uint64_t cover = 0;
            for (auto w : rows) {
                cover |= w;
            }
            if (opts.forbid_zero_coordinates && cover != full) {
                return;
            }
            if (k > 0 && min_weight_masks(rows) < opts.min_distance) {
                return;
            }
            if (k == 0 && opts.min_distance > 0) {
                return;
            }
            const auto code = LinearCode::from_generator(matrix_from_masks(rows, n));
            if (claim(rows, code)) {
                reps.push_back(code);
            }
        } else {
            // rows form H; C = ker H
            if (opts.forbid_zero_coordinates && r > 0 && min_weight_masks(rows) < 2) {
                return;
            }
            if (opts.min_distance >= 2) {
                // column j of H as an r-bit value; d >= 2 iff no zero column, d >= 3 iff also distinct
                std::vector<std::uint32_t> cols(n, 0);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        if ((rows[i] >> j) & 1U) {
                            cols[j] |= std::uint32_t{1} << i;
                        }
                    }
                }
                for (auto col : cols) {
                    if (col == 0) {
                        return;
                    }
                }
                if (opts.min_distance >= 3) {
                    std::sort(cols.begin(), cols.end());
                    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
                        return;
                    }
                }
                if (opts.min_distance > 3) {
                    const auto code = LinearCode::from_parity_check(matrix_from_masks(rows, n));
                    if (*code.min_distance(64) < opts.min_distance) {
                        return;
                    }
                }
            }
            const auto dual_code = LinearCode::from_generator(matrix_from_masks(rows, n));
            if (claim(rows, dual_code)) {
                reps.push_back(dual_code.dual());
            }
        }
    });
    std::vector<std::pair<CodeKey, LinearCode>> keyed;
    keyed.reserve(reps.size());
    for (auto& c : reps) {
        keyed.emplace_back(code_canonical_key(c), std::move(c));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LinearCode> out;
    out.reserve(keyed.size());
    for (auto& [key, code] : keyed) {
        out.push_back(std::move(code));
    }
    return out;
}

}  // namespace pcw
