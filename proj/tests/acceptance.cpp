// One PASS/FAIL line per acceptance criterion; exit status 1 when any criterion fails.

#include "pcw/bounds.hpp"
#include "pcw/codes.hpp"
#include "pcw/cone.hpp"
#include "pcw/constructions.hpp"
#include "pcw/cyclic.hpp"
#include "pcw/pseudoweight.hpp"
#include "pcw/redundancy.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iterator>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace pcw;

namespace {

// Tolerances.
constexpr double sharp_tol = 1e-6;      // cyclic scan: bound vs d, and the reported [63,37], [73,45] bounds
constexpr double eigen_tol = 1e-9;      // eigenvalue bound vs exact AWGNC minimum
constexpr double family_tol = 1e-9;     // floating circulant bound vs exact family bound

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass_ = false;
            if (!failures_.empty()) {
                failures_ += "; ";
            }
            failures_ += what;
        }
    }
    [[nodiscard]] Outcome done(const std::string& summary) const {
        return {pass_, pass_ ? summary : summary + " | failed: " + failures_};
    }

private:
    bool pass_ = true;
    std::string failures_;
};

std::string q(const ExactRational& x) { return to_string(x); }

BitMatrix h3() { return BitMatrix::from_strings({"1110100", "0111010", "0011101"}); }
BitMatrix h4() { return BitMatrix::from_strings({"1101001", "1010101", "0110011", "0001111"}); }
BitMatrix h7() {
    return BitMatrix::from_strings({"1110100", "0111010", "0011101", "1001110", "0100111", "1010011", "1101001"});
}

// Global property observer: chain and distance cap on every matrix analyzed, design bound on detected designs.
struct ObserverStats {
    std::mutex mu;
    std::size_t matrices = 0;
    std::size_t chain_violations = 0;
    std::size_t cap_violations = 0;
    std::size_t designs = 0;
    std::size_t design_violations = 0;
};
ObserverStats g_obs;

void install_observer() {
    set_minima_observer([](const BitMatrix& h, const PseudoweightReport& rep) {
        const auto& bec = rep.at(Channel::bec).value;
        const auto& aw = rep.at(Channel::awgnc).value;
        const auto& bsc = rep.at(Channel::bsc).value;
        const auto& mf = rep.at(Channel::maxfrac).value;
        const bool chain = mf <= aw && aw <= bec && mf <= bsc && bsc <= bec;
        bool cap = true;
        const auto code = LinearCode::from_parity_check(h);
        if (code.dimension() > 0) {
            if (const auto d = min_distance_either_side(code, 20)) {
                for (auto c : all_channels) {
                    cap = cap && rep.at(c).value <= static_cast<long long>(*d);
                }
            }
        }
        std::optional<bool> design_ok;
        if (const auto p = detect_design(h)) {
            design_ok = design_lower_bound(*p) <= mf;
        }
        std::lock_guard lock(g_obs.mu);
        ++g_obs.matrices;
        g_obs.chain_violations += chain ? 0 : 1;
        g_obs.cap_violations += cap ? 0 : 1;
        if (design_ok) {
            ++g_obs.designs;
            g_obs.design_violations += *design_ok ? 0 : 1;
        }
    });
}

std::vector<ExactRational> rationals(std::initializer_list<long long> v) {
    std::vector<ExactRational> out;
    for (auto x : v) {
        out.emplace_back(x);
    }
    return out;
}

std::string rho_text(const RhoResult& r) {
    switch (r.kind) {
        case RhoResult::Kind::finite:
            return std::to_string(r.value);
        case RhoResult::Kind::infinite:
            return "infinite";
        case RhoResult::Kind::unknown:
            break;
    }
    return "unknown";
}

bool rho_is(const RhoResult& r, std::size_t v) { return r.kind == RhoResult::Kind::finite && r.value == v; }

bool any_truncated(const RhoResult& r) {
    return std::any_of(r.levels.begin(), r.levels.end(), [](const LevelStats& l) { return l.truncated; });
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Checker c;
    const auto x = rationals({0, 0, 1, 0, 1, 1, 2});
    c.expect(FundamentalCone::build(h3()).contains(x), "x outside the cone");
    const std::vector<ExactRational> want{ExactRational(4), ExactRational(25, 7), ExactRational(3), ExactRational(5, 2)};
    std::string got;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto w = pseudoweight(all_channels[i], x);
        c.expect(w == want[i], std::string(channel_name(all_channels[i])) + " = " + q(w));
        got += (i ? ", " : "") + q(w);
    }
    return c.done("weights " + got);
}

Outcome criterion2() {
    Checker c;
    const std::map<std::pair<std::size_t, std::size_t>, std::size_t> table{
        {{5, 1}, 1}, {{5, 2}, 1}, {{6, 1}, 1},  {{6, 2}, 3},  {{6, 3}, 1},  {{7, 1}, 1},
        {{7, 2}, 4}, {{7, 3}, 4}, {{7, 4}, 1},  {{8, 1}, 1},  {{8, 2}, 6},  {{8, 3}, 10},
        {{8, 4}, 5}, {{9, 1}, 1}, {{9, 2}, 8},  {{9, 3}, 23}, {{9, 4}, 23}, {{9, 5}, 5}};
    std::size_t matched = 0;
    for (std::size_t n = 5; n <= 9; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            const auto count = enumerate_codes(n, k).size();
            const auto it = table.find({n, k});
            const std::size_t want = it == table.end() ? 0 : it->second;
            c.expect(count == want, "[" + std::to_string(n) + "," + std::to_string(k) + "] count " +
                                        std::to_string(count) + " != " + std::to_string(want));
            matched += (count == want && want > 0) ? 1 : 0;
        }
    }
    return c.done(std::to_string(matched) + " nonzero counts reproduced, all other (n,k) with n = 5..9 empty");
}

Outcome criterion3() {
    Checker c;
    const auto h = hamming_code(3);
    const std::map<Channel, std::size_t> want{
        {Channel::bec, 3}, {Channel::awgnc, 3}, {Channel::bsc, 4}, {Channel::maxfrac, 7}};
    std::string got;
    for (const auto& [ch, v] : want) {
        const auto r = pseudoredundancy(h, ch);
        c.expect(rho_is(r, v), std::string(channel_name(ch)) + " rho " + rho_text(r));
        got += std::string(channel_name(ch)) + "=" + rho_text(r) + " ";
    }
    const auto r3 = min_pseudoweights(h3());
    const auto r4 = min_pseudoweights(h4());
    const auto r7 = min_pseudoweights(h7());
    c.expect(r3.at(Channel::bec).value == 3 && r3.at(Channel::awgnc).value == 3, "H3 minima");
    c.expect(r4.at(Channel::bsc).value == 3, "H4 BSC minimum " + q(r4.at(Channel::bsc).value));
    c.expect(r7.at(Channel::maxfrac).value == 3, "H7 max-frac minimum " + q(r7.at(Channel::maxfrac).value));
    return c.done("rho " + got + "| H3 BEC/AWGNC, H4 BSC, H7 max-frac minima all 3");
}

Outcome criterion4() {
    Checker c;
    const auto s = simplex_code(3);
    const auto aw = pseudoredundancy(s, Channel::awgnc);
    const auto bsc = pseudoredundancy(s, Channel::bsc);
    const auto mf = pseudoredundancy(s, Channel::maxfrac);
    c.expect(rho_is(aw, 4), "AWGNC rho " + rho_text(aw));
    c.expect(rho_is(bsc, 5), "BSC rho " + rho_text(bsc));
    c.expect(rho_is(mf, 7), "max-frac rho " + rho_text(mf));
    std::size_t regular_witnesses = 0;
    std::size_t achieving = 0;
    const auto stats = matrices_with_rho_rows(s, 4, [&](const BitMatrix& h) {
        if (achieves_distance(h, Channel::awgnc, 4)) {
            ++achieving;
            const auto rw = h.row_weights();
            regular_witnesses += std::all_of(rw.begin(), rw.end(), [](std::size_t w) { return w == 3; }) ? 1 : 0;
        }
        return true;
    });
    c.expect(!stats.truncated && stats.deduplicated, "level 4 not exhaustive");
    c.expect(regular_witnesses == 1, "row-weight-3 witnesses " + std::to_string(regular_witnesses));
    if (aw.witness) {
        const auto rw = aw.witness->row_weights();
        c.expect(std::all_of(rw.begin(), rw.end(), [](std::size_t w) { return w == 3; }), "witness not row-regular");
    }
    return c.done("rho AWGNC=" + rho_text(aw) + " BSC=" + rho_text(bsc) + " max-frac=" + rho_text(mf) + "; " +
                  std::to_string(stats.representatives) + " classes at 4 rows, " + std::to_string(achieving) +
                  " achieve 4, " + std::to_string(regular_witnesses) + " with row weight 3");
}

Outcome criterion5() {
    Checker c;
    const auto e = extend_overall_parity(hamming_code(3));
    std::map<ExactRational, std::size_t> hist;
    const auto stats = matrices_with_rho_rows(e, 5, [&](const BitMatrix& h) {
        ++hist[min_pseudoweights(h).at(Channel::awgnc).value];
        return true;
    });
    c.expect(!stats.truncated && stats.deduplicated, "level 5 not exhaustive");
    c.expect(stats.representatives == 12, "classes " + std::to_string(stats.representatives));
    c.expect(hist.size() == 3 && hist[ExactRational(4)] == 1 && hist[ExactRational(25, 7)] == 1 &&
                 hist[ExactRational(3)] == 10,
             "AWGNC histogram");
    const auto aw = pseudoredundancy(e, Channel::awgnc);
    const auto bsc = pseudoredundancy(e, Channel::bsc);
    const auto mf = pseudoredundancy(e, Channel::maxfrac);
    c.expect(rho_is(aw, 5), "AWGNC rho " + rho_text(aw));
    c.expect(rho_is(bsc, 6), "BSC rho " + rho_text(bsc));
    c.expect(mf.kind == RhoResult::Kind::infinite, "max-frac rho " + rho_text(mf));
    c.expect(mf.full_dual_minimum && *mf.full_dual_minimum <= ExactRational(10, 3), "full dual minimum above 10/3");
    std::string h;
    for (const auto& [w, n] : hist) {
        h += q(w) + ":" + std::to_string(n) + " ";
    }
    return c.done(std::to_string(stats.representatives) + " classes at 5 rows (AWGNC minima " + h + "); rho AWGNC=" +
                  rho_text(aw) + " BSC=" + rho_text(bsc) + " max-frac=" + rho_text(mf) + " with full-dual minimum " +
                  (mf.full_dual_minimum ? q(*mf.full_dual_minimum) : "none"));
}

Outcome criterion6() {
    Checker c;
    std::size_t codes = 0;
    std::size_t truncations = 0;
    std::size_t unknown = 0;
    std::vector<LinearCode> offenders;
    for (std::size_t n = 3; n <= 9; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            for (const auto& code : enumerate_codes(n, k)) {
                const auto r = pseudoredundancy(code, Channel::awgnc);
                ++codes;
                truncations += any_truncated(r) ? 1 : 0;
                unknown += r.kind == RhoResult::Kind::unknown ? 1 : 0;
                if (r.kind != RhoResult::Kind::finite || r.value > code.redundancy()) {
                    offenders.push_back(code);
                }
            }
        }
    }
    c.expect(truncations == 0, std::to_string(truncations) + " truncated searches");
    c.expect(unknown == 0, std::to_string(unknown) + " undetermined codes");
    c.expect(offenders.size() == 2, std::to_string(offenders.size()) + " codes with rho > n - k");
    std::size_t reps = 0;
    std::size_t achieving = 0;
    bool saw_8 = false;
    bool saw_9 = false;
    for (const auto& o : offenders) {
        const auto d = *o.min_distance();
        if (o.length() == 8 && o.dimension() == 4 && d == 4) {
            saw_8 = true;
        }
        if (o.length() == 9 && o.dimension() == 4 && d == 4) {
            saw_9 = true;
            const auto st = matrices_with_rho_rows(o, 6, [&](const BitMatrix& h) {
                achieving += achieves_distance(h, Channel::awgnc, 4) ? 1 : 0;
                return true;
            });
            c.expect(!st.truncated && st.deduplicated, "[9,4,4] level 6 not exhaustive");
            reps = st.representatives;
        }
    }
    c.expect(saw_8 && saw_9, "offenders are not [8,4,4] and [9,4,4]");
    c.expect(reps == 2526, "[9,4,4] classes at 6 rows " + std::to_string(reps));
    c.expect(achieving == 13, "[9,4,4] achieving 6-row classes " + std::to_string(achieving));
    return c.done(std::to_string(codes) + " codes, " + std::to_string(truncations) + " truncations; offenders " +
                  (saw_8 ? "[8,4,4] " : "") + (saw_9 ? "[9,4,4] " : "") + "; [9,4,4] has " + std::to_string(reps) +
                  " classes at 6 rows, " + std::to_string(achieving) + " achieve 4");
}

Outcome criterion7() {
    Checker c;
    std::string got;
    const auto c633 = enumerate_codes(6, 3);
    c.expect(c633.size() == 1 && c633[0].min_distance() == 3, "no unique [6,3,3] code");
    for (const auto& code : c633) {
        const auto r = pseudoredundancy(code, Channel::maxfrac);
        c.expect(rho_is(r, 4), "[6,3,3] rho " + rho_text(r));
        got += "[6,3,3]=" + rho_text(r) + " ";
    }
    for (const auto& [name, code] : {std::pair{"[7,4,3]", hamming_code(3)}, std::pair{"[7,3,4]", simplex_code(3)}}) {
        const auto r = pseudoredundancy(code, Channel::maxfrac);
        c.expect(rho_is(r, 7), std::string(name) + " rho " + rho_text(r));
        got += std::string(name) + "=" + rho_text(r) + " ";
    }
    std::multiset<std::size_t> rhos;
    std::size_t count = 0;
    for (const auto& code : enumerate_codes(8, 3)) {
        if (code.min_distance() != 4) {
            continue;
        }
        ++count;
        const auto r = pseudoredundancy(code, Channel::maxfrac);
        c.expect(r.kind == RhoResult::Kind::finite, "[8,3,4] rho " + rho_text(r));
        rhos.insert(r.value);
        got += "[8,3,4]=" + rho_text(r) + " ";
    }
    // Three [8,3,4] codes exist; the third meets rho = n - k = 5.
    c.expect(count == 3, std::to_string(count) + " [8,3,4] codes");
    std::multiset<std::size_t> above;
    std::copy_if(rhos.begin(), rhos.end(), std::inserter(above, above.end()), [](std::size_t r) { return r > 5; });
    c.expect(above == std::multiset<std::size_t>{6, 8}, "[8,3,4] redundancies above n - k");
    c.expect(rhos.count(5) == 1, "third [8,3,4] code above n - k");
    return c.done("max-frac rho " + got);
}

Outcome criterion8() {
    Checker c;
    using Row = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;  // n, k, d, w
    std::set<Row> expected;
    for (std::size_t n = 3; n <= 73; ++n) {
        expected.insert({n, 1, n, 2});
    }
    for (std::size_t m = 3; m <= 6; ++m) {
        const std::size_t n = (std::size_t{1} << m) - 1;
        expected.insert({n, n - m, 3, std::size_t{1} << (m - 1)});
    }
    for (const Row& r : {Row{7, 3, 4, 3}, Row{15, 7, 5, 4}, Row{21, 11, 6, 5}, Row{63, 37, 9, 8}, Row{73, 45, 10, 9}}) {
        expected.insert(r);
    }
    // Doubled constituents H (x) J_2: Hamming for m = 2..5, Hamming with overall parity for m = 3..5, PG(2,4).
    for (std::size_t m = 2; m <= 5; ++m) {
        const std::size_t n = (std::size_t{1} << m) - 1;
        expected.insert({2 * n, 2 * n - m, 2, std::size_t{1} << m});
        if (m >= 3) {
            expected.insert({2 * n, 2 * n - m - 1, 2, (std::size_t{1} << m) - 2});
        }
    }
    expected.insert({42, 32, 2, 10});

    ScanOptions opts;
    opts.n_max = 73;
    const auto records = scan(opts);
    std::set<Row> sharp;
    std::size_t all_ones = 0;
    std::size_t unavailable_candidates = 0;
    std::optional<double> b63;
    std::optional<double> b73;
    for (const auto& r : records) {
        if (r.n == 63 && r.k == 37 && r.w == 8) {
            b63 = r.bound;
        }
        if (r.n == 73 && r.k == 45 && r.w == 9) {
            b73 = r.bound;
        }
        if (r.bound && !r.d && *r.bound > 0.5 && std::abs(*r.bound - std::round(*r.bound)) < sharp_tol) {
            ++unavailable_candidates;
        }
        if (!r.sharp) {
            continue;
        }
        // The all-ones circulant (w = n, even-weight code) has mu2 = 0 and bound exactly 2. It is not among
        // the expected rows, so it is counted separately and required exactly once per length.
        if (r.w == r.n && r.k == r.n - 1) {
            ++all_ones;
            continue;
        }
        sharp.insert({r.n, r.k, *r.d, r.w});
    }
    c.expect(unavailable_candidates == 0, std::to_string(unavailable_candidates) + " candidates without d");
    std::string diff;
    for (const auto& r : sharp) {
        if (!expected.count(r)) {
            diff += " extra[" + std::to_string(std::get<0>(r)) + "," + std::to_string(std::get<1>(r)) + "," +
                    std::to_string(std::get<2>(r)) + "] w=" + std::to_string(std::get<3>(r));
        }
    }
    for (const auto& r : expected) {
        if (!sharp.count(r)) {
            diff += " missing[" + std::to_string(std::get<0>(r)) + "," + std::to_string(std::get<1>(r)) + "," +
                    std::to_string(std::get<2>(r)) + "] w=" + std::to_string(std::get<3>(r));
        }
    }
    c.expect(diff.empty(), "sharp set differs:" + diff);
    c.expect(all_ones == 72, std::to_string(all_ones) + " even-weight records, expected one per n = 2..73");
    c.expect(b63 && std::abs(*b63 - 9.0) < sharp_tol, "[63,37] bound");
    c.expect(b73 && std::abs(*b73 - 10.0) < sharp_tol, "[73,45] bound");
    char buf[128];
    std::snprintf(buf, sizeof buf, "; [63,37] bound %.9f, [73,45] bound %.9f", b63.value_or(NAN), b73.value_or(NAN));
    return c.done(std::to_string(records.size()) + " records; " + std::to_string(sharp.size()) +
                  " sharp parameter rows equal the expected rows (" + std::to_string(expected.size()) + ") plus " +
                  std::to_string(all_ones) + " even-weight [n,n-1,2] records" + buf);
}

Outcome criterion9() {
    Checker c;
    const std::vector<ExactRational> want{ExactRational(4), ExactRational(10, 3), ExactRational(22, 7),
                                          ExactRational(46, 15)};
    std::string got;
    for (std::size_t m = 3; m <= 6; ++m) {
        const auto f = hamming_parity_family(m);
        c.expect(f.bound == want[m - 3], "m=" + std::to_string(m) + " bound " + q(f.bound));
        const auto b = circulant_bound(f.spec);
        c.expect(std::abs(b.bound - f.bound.convert_to<double>()) < family_tol, "m=" + std::to_string(m) +
                                                                                     " circulant bound mismatch");
        got += q(f.bound) + " ";
    }
    const auto rep = min_pseudoweights(full_circulant(hamming_parity_family(3).spec));
    c.expect(rep.at(Channel::awgnc).value == 4, "m=3 AWGNC minimum " + q(rep.at(Channel::awgnc).value));
    return c.done("bounds " + got + "; m=3 AWGNC minimum " + q(rep.at(Channel::awgnc).value));
}

// --- criterion 10 pieces ---

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t n) {
    BitMatrix m(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j, rng() % 3 != 0);
        }
    }
    return m;
}

BitMatrix circulant(const std::string& first_row) {
    const std::size_t n = first_row.size();
    BitMatrix h(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            h.set(j, (i + j) % n, first_row[i] == '1');
        }
    }
    return h;
}

LinearCode repetition(std::size_t n) {
    BitMatrix g(1, n);
    for (std::size_t i = 0; i < n; ++i) {
        g.set(0, i);
    }
    return LinearCode::from_generator(g);
}

BitMatrix witness(const LinearCode& c) {
    return c.dimension() == 1 ? dimension1_parity_check(c) : dimension2_parity_check(c);
}

Outcome criterion10() {
    Checker c;
    std::vector<std::string> parts;

    {  // DD vs brute force
        std::mt19937_64 rng(2025);
        std::size_t cones = 0;
        while (cones < 200) {
            const std::size_t n = 2 + rng() % 4;
            const auto k = FundamentalCone::build(random_matrix(rng, 1 + rng() % 4, n));
            c.expect(extreme_rays(k) == brute_force_rays(k), "DD differs from brute force");
            ++cones;
        }
        std::size_t fixed = 0;
        for (const auto& h : {h3(), h4(), h7()}) {
            const auto k = FundamentalCone::build(h);
            c.expect(extreme_rays(k) == brute_force_rays(k), "DD differs on an n=7 matrix");
            ++fixed;
        }
        parts.push_back(std::to_string(cones) + " random cones + " + std::to_string(fixed) + " n=7 matrices DD=brute");
    }
    {  // row addition
        std::mt19937_64 rng(31);
        std::size_t cases = 0;
        while (cases < 100) {
            const std::size_t n = 4 + rng() % 4;
            BitMatrix h(1 + rng() % 3, n);
            for (std::size_t i = 0; i < h.rows(); ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    h.set(i, j, rng() % 2 == 1);
                }
            }
            BitVector extra(n);
            for (std::size_t i = 0; i < h.rows(); ++i) {
                if (rng() % 2 == 1) {
                    extra ^= h.row(i);
                }
            }
            auto bigger = h;
            bigger.append_row(extra);
            const auto base = extreme_rays(FundamentalCone::build(h));
            const auto more = extreme_rays(FundamentalCone::build(bigger));
            if (base.empty() || more.empty()) {
                continue;
            }
            const auto a = minima_over_rays(base, n);
            const auto b = minima_over_rays(more, n);
            for (auto ch : all_channels) {
                c.expect(b.at(ch).value >= a.at(ch).value, "row addition lowered a minimum");
            }
            ++cases;
        }
        parts.push_back(std::to_string(cases) + " row additions");
    }
    {  // scale invariance and binary collapse
        std::mt19937_64 rng(1);
        for (int t = 0; t < 1000; ++t) {
            const auto n = 1 + rng() % 9;
            std::vector<ExactRational> x;
            std::vector<ExactRational> b;
            long long wt = 0;
            for (std::size_t i = 0; i < n; ++i) {
                x.emplace_back(static_cast<long long>(rng() % 6));
                const long long bit = static_cast<long long>(rng() % 2);
                b.emplace_back(bit);
                wt += bit;
            }
            const ExactRational s(static_cast<long long>(1 + rng() % 9), static_cast<long long>(1 + rng() % 7));
            auto y = x;
            for (auto& v : y) {
                v *= s;
            }
            for (auto ch : all_channels) {
                c.expect(pseudoweight(ch, x) == pseudoweight(ch, y), "scale invariance");
                c.expect(pseudoweight(ch, b) == wt, "binary collapse");
            }
        }
        parts.push_back("1000 scale/binary vectors");
    }
    {  // dual-distance dominance
        std::size_t codes = 0;
        for (std::size_t n = 3; n <= 8; ++n) {
            for (std::size_t k = 1; k < n; ++k) {
                for (const auto& code : enumerate_codes(n, k, {.min_distance = 1, .forbid_zero_coordinates = true})) {
                    const auto dd = *code.dual_distance();
                    const auto rep = min_pseudoweights(code.parity_check());
                    c.expect(rep.at(Channel::awgnc).value <= awgnc_dual_bound(n, dd), "AWGNC dual bound");
                    c.expect(rep.at(Channel::bsc).value <= static_cast<long long>(bsc_dual_bound(n, dd)), "BSC dual bound");
                    ++codes;
                }
            }
        }
        parts.push_back(std::to_string(codes) + " codes under the dual bounds");
    }
    {  // eigenvalue bound on random regular connected matrices
        std::mt19937 rng(11);
        int tested = 0;
        while (tested < 50) {
            const std::size_t n = 4 + rng() % 7;
            BitMatrix h;
            if (tested % 2 == 0) {
                const std::size_t w = 2 + rng() % 3;
                std::string row(n, '0');
                for (std::size_t placed = 0; placed < w;) {
                    const auto i = rng() % n;
                    if (row[i] == '0') {
                        row[i] = '1';
                        ++placed;
                    }
                }
                h = circulant(row);
            } else {
                const std::size_t w_c = 2 + rng() % 2;
                std::vector<std::size_t> sizes;
                for (std::size_t w_r = 2; w_r <= n; ++w_r) {
                    if ((n * w_c) % w_r == 0) {
                        sizes.push_back(w_r);
                    }
                }
                const auto w_r = sizes[rng() % sizes.size()];
                std::vector<std::size_t> stubs;
                for (std::size_t i = 0; i < n; ++i) {
                    stubs.insert(stubs.end(), w_c, i);
                }
                std::shuffle(stubs.begin(), stubs.end(), rng);
                h = BitMatrix(stubs.size() / w_r, n);
                bool simple = true;
                for (std::size_t t = 0; t < stubs.size() && simple; ++t) {
                    simple = !h.get(t / w_r, stubs[t]);
                    h.set(t / w_r, stubs[t]);
                }
                if (!simple) {
                    continue;
                }
            }
            if (!tanner_graph_connected(h)) {
                continue;
            }
            EigenvalueBound b;
            try {
                b = eigenvalue_bound(h);
            } catch (const std::invalid_argument&) {
                continue;
            }
            const auto rep = min_pseudoweights(h);
            c.expect(b.value <= rep.at(Channel::awgnc).value.convert_to<double>() + eigen_tol, "eigenvalue bound");
            ++tested;
        }
        parts.push_back("50 regular matrices under the eigenvalue bound");
    }
    {  // designs: the observer checks every analyzed matrix with a detected design
        const auto ext = extend_overall_parity(hamming_code(3));
        for (const auto& h : {all_dual_rows(hamming_code(3)), dual_rows_of_weight(simplex_code(3), 3),
                              full_dual_matrix(ext), dual_rows_of_weight(ext, 4), h7()}) {
            (void)min_pseudoweights(h);
        }
    }
    {  // direct sum and (u|u)
        std::vector<LinearCode> codes;
        for (std::size_t n = 2; n <= 7; ++n) {
            for (std::size_t k = 1; k <= 2; ++k) {
                for (auto& code : enumerate_codes(n, k, {.min_distance = 2, .forbid_zero_coordinates = true})) {
                    codes.push_back(std::move(code));
                }
            }
        }
        std::size_t pairs = 0;
        for (std::size_t a = 0; a < codes.size(); ++a) {
            for (std::size_t b = a; b < codes.size(); ++b) {
                if (codes[a].length() + codes[b].length() > 9) {
                    continue;
                }
                const auto s = direct_sum(codes[a], witness(codes[a]), codes[b], witness(codes[b]));
                const auto d = static_cast<long long>(std::min(*codes[a].min_distance(), *codes[b].min_distance()));
                const auto rep = min_pseudoweights(s.matrix);
                c.expect(rep.at(Channel::maxfrac).value == d && rep.at(Channel::awgnc).value == d, "direct sum");
                ++pairs;
            }
        }
        std::size_t doubled = 0;
        for (const auto& code : codes) {
            if (2 * code.length() > 9) {
                continue;
            }
            const auto u = uu_repeat(code, witness(code));
            const auto d = static_cast<long long>(2 * *code.min_distance());
            const auto rep = min_pseudoweights(u.matrix);
            c.expect(u.code.min_distance() == static_cast<std::size_t>(d), "(u|u) distance");
            c.expect(rep.at(Channel::maxfrac).value == d && rep.at(Channel::awgnc).value == d, "(u|u) minima");
            ++doubled;
        }
        for (std::size_t n = 2; n <= 4; ++n) {
            const auto u = uu_repeat(LinearCode::full_space(n), BitMatrix(0, n));
            const auto rep = min_pseudoweights(u.matrix);
            c.expect(rep.at(Channel::maxfrac).value == 2 && rep.at(Channel::awgnc).value == 2, "(u|u) of F2^n");
            ++doubled;
        }
        const auto r3 = repetition(3);
        c.expect(min_pseudoweights(uu_repeat(r3, dimension1_parity_check(r3)).matrix).at(Channel::awgnc).value == 6,
                 "(u|u) of the repetition code");
        parts.push_back(std::to_string(pairs) + " direct sums, " + std::to_string(doubled) + " (u|u)");
    }
    {  // dimension 2
        std::size_t count = 0;
        for (std::size_t n = 2; n <= 9; ++n) {
            for (const auto& code : enumerate_codes(n, 2, {.min_distance = 1, .forbid_zero_coordinates = false})) {
                const auto h = dimension2_parity_check(code);
                const auto rep = min_pseudoweights(h);
                const auto d = static_cast<long long>(*code.min_distance());
                c.expect(h.rows() == n - 2 && LinearCode::from_parity_check(h) == code, "dimension-2 matrix");
                for (auto ch : all_channels) {
                    c.expect(rep.at(ch).value == d, "dimension-2 minimum");
                }
                ++count;
            }
        }
        parts.push_back(std::to_string(count) + " [n,2] codes achieve d");
    }
    {  // BSC sampling
        std::mt19937_64 rng(2024);
        std::vector<BitMatrix> mats{h3(), h4(), h7(), BitMatrix::from_strings({"1100", "0110", "1010", "1111"})};
        for (int t = 0; t < 16; ++t) {
            mats.push_back(random_matrix(rng, 1 + rng() % 5, 3 + rng() % 6));
        }
        std::size_t cones = 0;
        for (const auto& h : mats) {
            const auto rays = extreme_rays(FundamentalCone::build(h));
            if (rays.empty()) {
                continue;
            }
            const auto rep = minima_over_rays(rays, h.cols());
            for (int s = 0; s < 1000; ++s) {
                std::vector<ExactRational> x(h.cols(), 0);
                const auto terms = 1 + rng() % 3;
                for (std::size_t t = 0; t < terms; ++t) {
                    const auto& ray = rays[rng() % rays.size()];
                    const ExactRational k(static_cast<long long>(1 + rng() % 7), static_cast<long long>(1 + rng() % 5));
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        x[i] += k * ray[i];
                    }
                }
                c.expect(w_bsc(x) >= rep.at(Channel::bsc).value, "BSC sample below the minimum");
            }
            ++cones;
        }
        parts.push_back(std::to_string(cones) + " cones x 1000 BSC samples");
    }
    {
        std::lock_guard lock(g_obs.mu);
        c.expect(g_obs.chain_violations == 0, std::to_string(g_obs.chain_violations) + " chain violations");
        c.expect(g_obs.cap_violations == 0, std::to_string(g_obs.cap_violations) + " distance-cap violations");
        c.expect(g_obs.designs > 0 && g_obs.design_violations == 0,
                 std::to_string(g_obs.design_violations) + " design-bound violations");
        parts.insert(parts.begin(), "chain/cap on " + std::to_string(g_obs.matrices) + " matrices, design bound on " +
                                        std::to_string(g_obs.designs) + " designs");
    }
    std::string s;
    for (const auto& p : parts) {
        s += (s.empty() ? "" : "; ") + p;
    }
    return c.done(s);
}

}  // namespace

int main() {
    install_observer();
    struct Criterion {
        std::string name;
        std::function<Outcome()> run;
        double seconds;  // runtime limit
    };
    const std::vector<Criterion> criteria{
        {"cone point pseudoweights", criterion1, 1},
        {"inequivalent code counts", criterion2, 600},
        {"Hamming [7,4,3] redundancies", criterion3, 60},
        {"simplex [7,3,4] redundancies", criterion4, 300},
        {"extended Hamming [8,4,4]", criterion5, 600},
        {"length <= 9 AWGNC sweep", criterion6, 7200},
        {"max-fractional small codes", criterion7, 1800},
        {"cyclic scan n <= 73", criterion8, 600},
        {"Hamming-parity family", criterion9, 120},
        {"property suites", criterion10, 3600},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > criteria[i].seconds) {
            o.pass = false;
            o.detail += " | over the " + std::to_string(static_cast<int>(criteria[i].seconds)) + " s limit";
        }
        std::printf("criterion %2zu %s: %s (%.1f s): %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].name.c_str(),
                    secs, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
