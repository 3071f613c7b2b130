#include "pcw/cyclic.hpp"

#include "pcw/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace pcw {

CyclicCodeSpec CyclicCodeSpec::make(std::size_t n, Poly2 h) {
    if (n == 0 || h.is_zero() || !divides(h, Poly2::xn_minus_1(n))) {
        throw std::invalid_argument("check polynomial must divide x^n - 1");
    }
    return CyclicCodeSpec{n, std::move(h)};
}

Poly2 CyclicCodeSpec::generator_polynomial() const { return Poly2::xn_minus_1(n) / h; }

LinearCode CyclicCodeSpec::code() const {
    const std::size_t k = dimension();
    if (k == 0) {
        return LinearCode::zero_code(n);
    }
    if (k == n) {
        return LinearCode::full_space(n);
    }
    const auto g = generator_polynomial().exponents();
    BitMatrix gen(k, n);
    for (std::size_t r = 0; r < k; ++r) {
        for (auto e : g) {
            gen.set(r, r + e);
        }
    }
    return LinearCode::from_generator(gen);
}

namespace {

// Exponents of h reduced mod x^n - 1, so h = x^n - 1 becomes the zero circulant.
std::vector<std::size_t> reduced_support(const CyclicCodeSpec& spec) {
    std::vector<bool> bit(spec.n, false);
    for (auto e : spec.h.exponents()) {
        bit[e % spec.n] = !bit[e % spec.n];
    }
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < spec.n; ++i) {
        if (bit[i]) {
            s.push_back(i);
        }
    }
    return s;
}

template <typename F>
void parallel_indices(std::size_t count, unsigned workers, F&& f) {
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                f(i);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

}  // namespace

BitMatrix full_circulant(const CyclicCodeSpec& spec) {
    const auto s = reduced_support(spec);
    BitMatrix m(spec.n, spec.n);
    for (std::size_t j = 0; j < spec.n; ++j) {
        for (auto e : s) {
            m.set(j, (j + spec.n - e) % spec.n);
        }
    }
    return m;
}

bool connected(const CyclicCodeSpec& spec) {
    const auto s = reduced_support(spec);
    if (s.empty()) {
        return false;
    }
    // Columns i and i + e - e' share a row; h_0 = 1 since x does not divide x^n - 1, so the
    // column components are the cosets of the subgroup generated by the support.
    std::size_t g = spec.n;
    for (auto e : s) {
        g = std::gcd(g, e);
    }
    return g == 1;
}

std::vector<long long> autocorrelation(const CyclicCodeSpec& spec) {
    const auto s = reduced_support(spec);
    std::vector<long long> l(spec.n, 0);
    for (auto a : s) {
        for (auto b : s) {
            ++l[(b + spec.n - a) % spec.n];
        }
    }
    return l;
}

std::vector<double> circulant_spectrum(const CyclicCodeSpec& spec) {
    const std::size_t n = spec.n;
    const auto l = autocorrelation(spec);
    std::vector<double> cosines(n);
    for (std::size_t t = 0; t < n; ++t) {
        cosines[t] = std::cos(2 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n));
    }
    std::vector<double> ev(n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0;
        double carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (l[i] == 0) {
                continue;
            }
            const double y = static_cast<double>(l[i]) * cosines[(i * j) % n] - carry;
            const double t = sum + y;
            carry = (t - sum) - y;
            sum = t;
        }
        ev[j] = sum;
    }
    return ev;
}

CirculantBound circulant_bound(const CyclicCodeSpec& spec) {
    if (!connected(spec)) {
        throw std::invalid_argument("circulant bound needs a connected Tanner graph");
    }
    auto ev = circulant_spectrum(spec);
    CirculantBound b;
    b.w = reduced_support(spec).size();
    std::sort(ev.begin(), ev.end(), std::greater<>());
    b.mu1 = ev.front();
    const double w2 = static_cast<double>(b.w * b.w);
    if (std::abs(b.mu1 - w2) > 1e-9 * w2) {
        throw std::logic_error("largest circulant eigenvalue differs from w^2");
    }
    const auto mu2 = second_eigenvalue(ev);
    if (!mu2) {
        throw std::invalid_argument("circulant bound needs a second distinct eigenvalue");
    }
    b.mu2 = *mu2;
    b.bound = eigenvalue_bound_from_spectrum(spec.n, b.w, w2, b.mu2);
    return b;
}

std::vector<ScanRecord> scan(const ScanOptions& opts) {
    if (opts.n_max > 250) {
        throw std::invalid_argument("scan length must not exceed 250");
    }
    std::vector<CyclicCodeSpec> jobs;
    for (std::size_t n = std::max<std::size_t>(opts.n_min, 1); n <= opts.n_max; ++n) {
        const auto full = Poly2::xn_minus_1(n);
        for (auto& h : divisors(factor_xn_minus_1(n))) {
            if (h.is_one() || h == full) {
                continue;
            }
            jobs.push_back(CyclicCodeSpec{n, h});
        }
    }
    std::vector<std::optional<ScanRecord>> out(jobs.size());
    parallel_indices(jobs.size(), opts.workers, [&](std::size_t idx) {
        const auto& spec = jobs[idx];
        ScanRecord r;
        r.n = spec.n;
        r.h = spec.h;
        r.k = spec.dimension();
        r.w = spec.h.weight();
        r.connected = connected(spec);
        if (!r.connected && !opts.include_disconnected) {
            return;
        }
        if (r.connected) {
            const auto b = circulant_bound(spec);
            r.mu2 = b.mu2;
            r.bound = b.bound;
        }
        // The bound is vacuous (<= 0) once mu2 > 2w; d >= 1 rules those records out.
        const bool candidate = r.bound && *r.bound > 0.5 &&
                               std::abs(*r.bound - std::round(*r.bound)) < sharpness_tolerance;
        if (opts.all_distances || candidate) {
            r.d = min_distance_either_side(spec.code(), opts.distance_threshold);
        }
        r.sharp = r.bound && r.d && std::abs(*r.bound - static_cast<double>(*r.d)) < sharpness_tolerance;
        out[idx] = std::move(r);
    });
    std::vector<ScanRecord> records;
    for (auto& r : out) {
        if (r) {
            records.push_back(std::move(*r));
        }
    }
    return records;
}

std::string scan_csv_header() { return "n,h,k,w,connected,mu2,bound,d,sharp"; }

std::string scan_csv_row(const ScanRecord& r) {
    auto num = [](const std::optional<double>& v) {
        if (!v) {
            return std::string();
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", *v);
        return std::string(buf);
    };
    return std::to_string(r.n) + "," + r.h.to_hex() + "," + std::to_string(r.k) + "," + std::to_string(r.w) + "," +
           (r.connected ? "1" : "0") + "," + num(r.mu2) + "," + num(r.bound) + "," +
           (r.d ? std::to_string(*r.d) : std::string()) + "," + (r.sharp ? "1" : "0");
}

KroneckerExpansion kronecker_expand(const BitMatrix& h, std::size_t m) {
    const std::size_t n = h.cols();
    if (m == 0 || n == 0 || h.rows() != n) {
        throw std::invalid_argument("Kronecker expansion needs a square circulant and m >= 1");
    }
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (h.get(j, i) != h.get(0, (i + n - j) % n)) {
                throw std::invalid_argument("matrix is not circulant");
            }
        }
    }
    Poly2 first;
    for (std::size_t i = 0; i < n; ++i) {
        if (h.get(i, 0)) {
            first.set_coeff(i, true);
        }
    }
    const CyclicCodeSpec spec{n, first};
    const auto base = circulant_bound(spec);
    KroneckerExpansion out;
    out.matrix = BitMatrix(n * m, n * m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!h.get(j, i)) {
                continue;
            }
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t b = 0; b < m; ++b) {
                    out.matrix.set(j * m + a, i * m + b);
                }
            }
        }
    }
    const double w = static_cast<double>(base.w);
    const double md = static_cast<double>(m);
    out.mu2 = base.mu2;
    out.bound = static_cast<double>(n) * (2 * w - md * base.mu2) / (w * w - base.mu2);
    return out;
}

Poly2 primitive_polynomial(std::size_t m) {
    if (m < 2 || m > 16) {
        throw std::invalid_argument("primitive polynomial degree must lie in [2, 16]");
    }
    const std::size_t order = (std::size_t{1} << m) - 1;
    std::vector<std::size_t> prime_factors;
    {
        std::size_t q = order;
        for (std::size_t p = 2; p * p <= q; ++p) {
            if (q % p == 0) {
                prime_factors.push_back(p);
                while (q % p == 0) {
                    q /= p;
                }
            }
        }
        if (q > 1) {
            prime_factors.push_back(q);
        }
    }
    auto power_x = [](std::size_t e, const Poly2& mod) {
        Poly2 result = Poly2::one();
        Poly2 base = Poly2::monomial(1) % mod;
        for (; e > 0; e >>= 1) {
            if (e & 1) {
                result = mulmod(result, base, mod);
            }
            base = mulmod(base, base, mod);
        }
        return result;
    };
    // Enumerate candidates in Poly2 order: fixed degree, ascending lower coefficients.
    for (std::uint64_t low = 1; low < (std::uint64_t{1} << m); low += 2) {
        Poly2 p = Poly2::monomial(m);
        for (std::size_t i = 0; i < m; ++i) {
            if ((low >> i) & 1) {
                p.set_coeff(i, true);
            }
        }
        if (!is_irreducible(p) || !power_x(order, p).is_one()) {
            continue;
        }
        if (std::all_of(prime_factors.begin(), prime_factors.end(),
                        [&](std::size_t q) { return !power_x(order / q, p).is_one(); })) {
            return p;
        }
    }
    throw std::logic_error("no primitive polynomial found");
}

FamilyMember hamming_parity_family(std::size_t m) {
    if (m < 3 || m > 16) {
        throw std::invalid_argument("family index m must lie in [3, 16]");
    }
    const std::size_t n = (std::size_t{1} << m) - 1;
    const Poly2 g = Poly2::from_exponents({0, 1}) * primitive_polynomial(m);
    FamilyMember f;
    f.spec = CyclicCodeSpec::make(n, Poly2::xn_minus_1(n) / g);
    const long long q = (1LL << (m - 2)) - 1;
    f.bound = ExactRational(3) + ExactRational(1, q);
    return f;
}

}  // namespace pcw
