#include "pcw/redundancy.hpp"

#include "pcw/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace pcw {

BitMatrix full_dual_matrix(const LinearCode& c) {
    if (c.redundancy() > 16) {
        throw std::length_error("full dual matrix needs n - k <= 16");
    }
    return all_dual_rows(c);
}

namespace {

std::size_t code_distance(const LinearCode& c) {
    const auto d = min_distance_either_side(c, 28);
    if (!d) {
        throw std::length_error("minimum distance out of reach");
    }
    return *d;
}

using Clock = std::chrono::steady_clock;

// Matrices of one code fail for recurring reasons; a pseudocodeword of low weight found
// in one cone is tried against later matrices before running double description.
class Tester {
public:
    Tester(Channel ch, std::size_t d, ConeOptions opts) : ch_(ch), d_(static_cast<long long>(d)), opts_(opts) {}

    enum class Outcome { pass, fail, overflow };

    Outcome test(const BitMatrix& h) {
        if (rejected_by_cache(h)) {
            return Outcome::fail;
        }
        std::vector<Ray> rays;
        try {
            rays = extreme_rays(FundamentalCone::build(h), opts_);
        } catch (const RayOverflow&) {
            return Outcome::overflow;
        }
        for (const auto& r : rays) {
            if (pseudoweight(ch_, r) < d_) {
                remember(r);
                return Outcome::fail;
            }
        }
        return Outcome::pass;
    }

private:
    static constexpr std::size_t cache_size = 128;

    bool rejected_by_cache(const BitMatrix& h) {
        std::lock_guard lock(mutex_);
        for (std::size_t idx = 0; idx < cache_.size(); ++idx) {
            if (in_cone(h, cache_[idx])) {
                if (idx > 0) {
                    std::swap(cache_[idx], cache_[idx / 2]);
                }
                return true;
            }
        }
        return false;
    }

    static bool in_cone(const BitMatrix& h, const std::vector<long long>& x) {
        for (const auto& row : h.row_vectors()) {
            long long sum = 0;
            long long mx = 0;
            for (std::size_t i = row.next_set(0); i < row.size(); i = row.next_set(i + 1)) {
                sum += x[i];
                mx = std::max(mx, x[i]);
            }
            if (2 * mx > sum) {
                return false;
            }
        }
        return true;
    }

    void remember(const Ray& r) {
        std::vector<long long> x;
        x.reserve(r.size());
        for (const auto& v : r) {
            if (v > (std::numeric_limits<long long>::max() >> 8)) {
                return;
            }
            x.push_back(static_cast<long long>(v));
        }
        std::lock_guard lock(mutex_);
        if (cache_.size() < cache_size) {
            cache_.push_back(std::move(x));
        } else {
            cache_.back() = std::move(x);
        }
    }

    Channel ch_;
    long long d_;
    ConeOptions opts_;
    std::mutex mutex_;
    std::vector<std::vector<long long>> cache_;
};

// Row subsets of the sorted nonzero dual codewords, deduplicated under Aut(C).
class LevelWalker {
public:
    explicit LevelWalker(const LinearCode& c) : code_(c) {
        if (c.length() > 64) {
            throw std::invalid_argument("row-subset search supports n <= 64");
        }
        for (const auto& w : sorted_dual_words(c)) {
            masks_.push_back(w.to_mask());
        }
        for (std::size_t a = 0; a <= masks_.size(); ++a) {
            binom_.emplace_back(masks_.size() + 2, 0);
            binom_[a][0] = 1;
            for (std::size_t b = 1; b <= a; ++b) {
                binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
            }
        }
    }

    [[nodiscard]] std::size_t word_count() const { return masks_.size(); }
    [[nodiscard]] std::uint64_t examined_at_visit() const { return examined_at_visit_; }

    [[nodiscard]] BitMatrix matrix(const std::vector<std::uint16_t>& subset) const {
        std::vector<BitVector> rows;
        rows.reserve(subset.size());
        for (auto s : subset) {
            rows.push_back(BitVector::from_mask(masks_[s], code_.length()));
        }
        return BitMatrix(std::move(rows), code_.length());
    }

    // Calls visit(subset) for each orbit representative; visit returns false to stop.
    template <class Visit>
    LevelStats walk(std::size_t rho, const LevelOptions& opts, std::optional<Clock::time_point> deadline, Visit&& visit) {
        LevelStats st;
        st.rho = rho;
        const std::size_t nwords = masks_.size();
        const std::size_t r = code_.redundancy();
        if (rho < r || rho > nwords) {
            return st;
        }
        const std::uint64_t total = binom_[nwords][rho];
        std::vector<std::uint64_t> visited;
        if (opts.deduplicate && prepare_group() && total <= (std::uint64_t{1} << 29)) {
            visited.assign((total + 63) / 64, 0);
            st.deduplicated = true;
        }
        std::vector<std::uint16_t> s(rho);
        for (std::size_t i = 0; i < rho; ++i) {
            s[i] = static_cast<std::uint16_t>(i);
        }
        std::vector<std::uint16_t> image(rho);
        while (true) {
            if (st.subsets_examined >= opts.subset_budget ||
                (deadline && (st.subsets_examined & 1023) == 0 && Clock::now() > *deadline)) {
                st.truncated = true;
                return st;
            }
            ++st.subsets_examined;
            const std::uint64_t rank = colex_rank(s);
            const bool seen = st.deduplicated && ((visited[rank >> 6] >> (rank & 63)) & 1U);
            if (!seen && spans(s, r)) {
                if (st.deduplicated) {
                    for (std::size_t g = 0; g < perm_count_; ++g) {
                        const std::uint16_t* p = &perms_[g * nwords];
                        for (std::size_t i = 0; i < rho; ++i) {
                            image[i] = p[s[i]];
                        }
                        std::sort(image.begin(), image.end());
                        const auto ir = colex_rank(image);
                        visited[ir >> 6] |= std::uint64_t{1} << (ir & 63);
                    }
                }
                ++st.representatives;
                examined_at_visit_ = st.subsets_examined;
                if (!visit(s)) {
                    return st;
                }
            }
            // next subset in colex order
            std::size_t i = 0;
            while (i < rho && static_cast<std::size_t>(s[i]) + 1 == (i + 1 < rho ? s[i + 1] : nwords)) {
                ++i;
            }
            if (i == rho) {
                return st;
            }
            ++s[i];
            for (std::size_t j = 0; j < i; ++j) {
                s[j] = static_cast<std::uint16_t>(j);
            }
        }
    }

private:
    static constexpr std::uint64_t max_group_order = 400'000;
    static constexpr std::uint64_t max_table_entries = 40'000'000;

    bool prepare_group() {
        if (group_ready_) {
            return perm_count_ > 0;
        }
        group_ready_ = true;
        if (code_.length() > 16) {
            return false;
        }
        const auto group = automorphisms(code_);
        if (group.order() > max_group_order || group.order() * masks_.size() > max_table_entries) {
            return false;
        }
        std::unordered_map<std::uint64_t, std::uint16_t> index;
        for (std::size_t i = 0; i < masks_.size(); ++i) {
            index.emplace(masks_[i], static_cast<std::uint16_t>(i));
        }
        const auto elems = group.elements(max_group_order);
        perms_.reserve(elems.size() * masks_.size());
        for (const auto& g : elems) {
            for (auto m : masks_) {
                std::uint64_t out = 0;
                for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
                    out |= std::uint64_t{1} << g[static_cast<std::size_t>(std::countr_zero(rest))];
                }
                perms_.push_back(index.at(out));
            }
        }
        perm_count_ = elems.size();
        return perm_count_ > 0;
    }

    [[nodiscard]] std::uint64_t colex_rank(const std::vector<std::uint16_t>& s) const {
        std::uint64_t rank = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            rank += binom_[s[i]][i + 1];
        }
        return rank;
    }

    [[nodiscard]] bool spans(const std::vector<std::uint16_t>& s, std::size_t r) const {
        std::uint64_t basis[64] = {};
        std::size_t rank = 0;
        for (auto idx : s) {
            std::uint64_t v = masks_[idx];
            while (v != 0) {
                const int top = 63 - std::countl_zero(v);
                if (basis[top] == 0) {
                    basis[top] = v;
                    ++rank;
                    break;
                }
                v ^= basis[top];
            }
        }
        return rank == r;
    }

    const LinearCode& code_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<std::uint64_t>> binom_;
    bool group_ready_ = false;
    std::vector<std::uint16_t> perms_;
    std::size_t perm_count_ = 0;
    std::uint64_t examined_at_visit_ = 0;
};

template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& f) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                f(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

struct LevelSearch {
    LevelStats stats;
    std::optional<BitMatrix> first_success;
    bool saw_failure = false;
    bool overflow = false;
};

// Stops at the first success unless `until_failure` asks to keep going until a failure is seen too.
LevelSearch search_level(LevelWalker& walker, std::size_t rho, Tester& tester, const SearchBudget& budget,
                         std::optional<Clock::time_point> deadline, bool until_failure) {
    LevelSearch out;
    const unsigned workers = std::max(1U, budget.workers);
    const std::size_t batch_size = workers == 1 ? 1 : 8 * static_cast<std::size_t>(workers);
    std::vector<std::vector<std::uint16_t>> batch;
    std::vector<std::uint64_t> batch_examined;
    std::uint64_t stop_examined = 0;
    std::uint64_t evaluated = 0;
    std::uint64_t successes = 0;
    bool done = false;
    auto flush = [&] {
        std::vector<Tester::Outcome> res(batch.size());
        parallel_for(batch.size(), workers, [&](std::size_t i) { res[i] = tester.test(walker.matrix(batch[i])); });
        for (std::size_t i = 0; i < batch.size() && !done; ++i) {
            ++evaluated;
            if (res[i] == Tester::Outcome::pass) {
                ++successes;
                if (!out.first_success) {
                    out.first_success = walker.matrix(batch[i]);
                }
            } else {
                out.saw_failure = true;
                out.overflow = out.overflow || res[i] == Tester::Outcome::overflow;
            }
            if (out.first_success && (!until_failure || out.saw_failure)) {
                done = true;
                stop_examined = batch_examined[i];
            }
        }
        batch.clear();
        batch_examined.clear();
    };
    LevelOptions lo;
    lo.subset_budget = budget.subsets_per_level;
    out.stats = walker.walk(rho, lo, deadline, [&](const std::vector<std::uint16_t>& s) {
        batch.push_back(s);
        batch_examined.push_back(walker.examined_at_visit());
        if (batch.size() >= batch_size) {
            flush();
        }
        return !done;
    });
    if (!done && !batch.empty()) {
        flush();
    }
    // Report the walk as if it had stopped right at the deciding representative,
    // so the statistics do not depend on the batch size.
    if (done) {
        out.stats.truncated = false;
        out.stats.subsets_examined = stop_examined;
        out.stats.representatives = evaluated;
    }
    out.stats.evaluated = evaluated;
    out.stats.successes = successes;
    return out;
}

}  // namespace

FinitenessResult is_finite(const LinearCode& c, Channel ch, const ConeOptions& opts) {
    const auto d = code_distance(c);
    FinitenessResult out;
    if (c.redundancy() == 0) {
        out.finite = true;
        out.minimum = static_cast<long long>(d);
        return out;
    }
    const auto rep = min_pseudoweights(full_dual_matrix(c), opts);
    out.minimum = rep.at(ch).value;
    out.witness = rep.at(ch).witness;
    out.finite = out.minimum == static_cast<long long>(d);
    return out;
}

bool achieves_distance(const BitMatrix& h, Channel ch, std::size_t d, const ConeOptions& opts) {
    for (const auto& r : extreme_rays(FundamentalCone::build(h), opts)) {
        if (pseudoweight(ch, r) < static_cast<long long>(d)) {
            return false;
        }
    }
    return true;
}

LevelStats matrices_with_rho_rows(const LinearCode& c, std::size_t rho,
                                  const std::function<bool(const BitMatrix&)>& visit, const LevelOptions& opts) {
    LevelWalker walker(c);
    auto st = walker.walk(rho, opts, std::nullopt,
                          [&](const std::vector<std::uint16_t>& s) { return visit(walker.matrix(s)); });
    return st;
}

std::string class_label(CodeClass c) {
    switch (c) {
        case CodeClass::c0:
            return "0";
        case CodeClass::c1:
            return "1";
        case CodeClass::c2:
            return "2";
        case CodeClass::c3:
            return "3";
        case CodeClass::at_least_2:
            return "at least 2";
        case CodeClass::unknown:
            return "unknown";
    }
    return "unknown";
}

RhoResult pseudoredundancy(const LinearCode& c, Channel ch, const SearchBudget& budget) {
    if (c.dimension() == 0) {
        throw std::invalid_argument("pseudoredundancy needs k >= 1");
    }
    RhoResult out;
    const std::size_t r = c.redundancy();
    const std::size_t d = code_distance(c);
    std::optional<Clock::time_point> deadline;
    if (budget.seconds) {
        deadline = Clock::now() +
                   std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*budget.seconds));
    }
    if (r == 0 || d <= 2) {
        // Every parity-check matrix reaches d when d <= 2.
        out.kind = RhoResult::Kind::finite;
        out.value = r;
        out.witness = c.parity_check();
        out.code_class = CodeClass::c3;
        out.note = "d <= 2";
        return out;
    }
    Tester tester(ch, d, budget.cone);
    LevelWalker walker(c);
    const bool confirm = budget.confirm_class3 && r <= budget.max_confirm_redundancy;

    std::optional<BitMatrix> seed;
    if (c.dimension() <= 2) {
        seed = c.dimension() == 1 ? dimension1_parity_check(c) : dimension2_parity_check(c);
        if (tester.test(*seed) != Tester::Outcome::pass) {
            seed.reset();
        }
    }
    if (seed && !confirm) {
        out.kind = RhoResult::Kind::finite;
        out.value = r;
        out.witness = seed;
        out.code_class = CodeClass::at_least_2;
        out.note = "dimension-2 construction";
        return out;
    }

    auto level = search_level(walker, r, tester, budget, deadline, confirm);
    out.levels.push_back(level.stats);
    if (level.first_success || seed) {
        out.kind = RhoResult::Kind::finite;
        out.value = r;
        out.witness = level.first_success ? level.first_success : seed;
        const bool complete = !level.stats.truncated && !level.overflow;
        if (!confirm) {
            out.code_class = CodeClass::at_least_2;
            out.note = "class-3 confirmation skipped";
        } else if (level.saw_failure) {
            out.code_class = CodeClass::c2;
        } else if (complete) {
            out.code_class = CodeClass::c3;
        } else {
            out.code_class = CodeClass::at_least_2;
            out.note = "class-3 confirmation truncated";
        }
        return out;
    }
    const bool level_complete = !level.stats.truncated && !level.overflow;

    FinitenessResult fin;
    try {
        fin = is_finite(c, ch, budget.cone);
    } catch (const std::exception& e) {
        out.note = std::string("finiteness test unavailable: ") + e.what();
        out.code_class = level_complete ? CodeClass::c1 : CodeClass::unknown;
        return out;
    }
    out.full_dual_minimum = fin.minimum;
    if (!fin.finite) {
        out.kind = RhoResult::Kind::infinite;
        out.infinite_witness = fin.witness;
        out.code_class = CodeClass::c0;
        return out;
    }
    if (!level_complete) {
        out.note = "level " + std::to_string(r) + " truncated";
        return out;
    }
    out.code_class = CodeClass::c1;
    for (std::size_t rho = r + 1; rho <= walker.word_count(); ++rho) {
        if (budget.max_rho && rho > *budget.max_rho) {
            out.note = "no level up to " + std::to_string(*budget.max_rho) + " reaches d";
            return out;
        }
        auto lv = search_level(walker, rho, tester, budget, deadline, false);
        out.levels.push_back(lv.stats);
        if (lv.first_success) {
            out.kind = RhoResult::Kind::finite;
            out.value = rho;
            out.witness = lv.first_success;
            return out;
        }
        if (lv.stats.truncated || lv.overflow) {
            out.note = "level " + std::to_string(rho) + " truncated";
            return out;
        }
    }
    // The full dual matrix reached d, so the last level cannot fail.
    throw std::logic_error("pseudoredundancy search exhausted every level");
}

CodeClass classify(const LinearCode& c, Channel ch, const SearchBudget& budget) {
    return pseudoredundancy(c, ch, budget).code_class;
}

std::string matrix_text(const BitMatrix& h) {
    std::string s = std::to_string(h.rows()) + " " + std::to_string(h.cols()) + "\n";
    for (const auto& row : h.row_vectors()) {
        s += row.to_string();
        s += '\n';
    }
    return s;
}

nlohmann::json LevelStats::to_json() const {
    return {{"rho", rho},
            {"subsets_examined", subsets_examined},
            {"representatives", representatives},
            {"evaluated", evaluated},
            {"successes", successes},
            {"truncated", truncated},
            {"deduplicated", deduplicated}};
}

nlohmann::json RhoResult::to_json() const {
    nlohmann::json j;
    switch (kind) {
        case Kind::finite:
            j["rho"] = value;
            break;
        case Kind::infinite:
            j["rho"] = "infinite";
            break;
        case Kind::unknown:
            j["rho"] = "unknown";
            break;
    }
    j["class"] = class_label(code_class);
    if (witness) {
        j["witness"] = matrix_text(*witness);
    }
    if (full_dual_minimum) {
        j["full_dual_minimum"] = to_string(*full_dual_minimum);
    }
    if (infinite_witness) {
        j["pseudocodeword"] = ray_to_json(*infinite_witness);
    }
    if (!note.empty()) {
        j["note"] = note;
    }
    auto lv = nlohmann::json::array();
    for (const auto& l : levels) {
        lv.push_back(l.to_json());
    }
    j["levels"] = lv;
    return j;
}

nlohmann::json RedundancyReport::to_json() const {
    nlohmann::json j;
    j["format"] = "pcw-redundancy-1";
    j["code"] = key.to_string();
    j["n"] = n;
    j["k"] = k;
    j["d"] = d;
    for (const auto& [ch, res] : channels) {
        j["channels"][std::string(channel_name(ch))] = res.to_json();
    }
    return j;
}

RedundancyReport redundancy_report(const LinearCode& c, std::span<const Channel> channels,
                                   const SearchBudget& budget) {
    RedundancyReport rep;
    rep.key = code_canonical_key(c);
    rep.n = c.length();
    rep.k = c.dimension();
    rep.d = code_distance(c);
    for (auto ch : channels) {
        rep.channels.emplace(ch, pseudoredundancy(c, ch, budget));
    }
    return rep;
}

std::vector<RedundancyReport> batch_report(std::size_t n, std::size_t k, std::span<const Channel> channels,
                                           const SearchBudget& budget, const EnumerationOptions& enumeration) {
    std::vector<RedundancyReport> out;
    for (const auto& c : enumerate_codes(n, k, enumeration)) {
        out.push_back(redundancy_report(c, channels, budget));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return out;
}

}  // namespace pcw
