#include "pcw/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcw {

namespace {

void check_dual_distance(std::size_t n, std::size_t dd) {
    if (dd < 1 || dd > n) {
        throw std::invalid_argument("dual distance must lie in [1, n]");
    }
}

}  // namespace

ExactRational awgnc_dual_bound(std::size_t n, std::size_t dd) {
    check_dual_distance(n, dd);
    const auto num = static_cast<long long>(n + dd - 2);
    const auto e = static_cast<long long>(dd - 1);
    if (e == 0 && n == 1) {
        throw std::invalid_argument("AWGNC dual bound is undefined for n = 1");
    }
    return ExactRational(num * num, e * e + static_cast<long long>(n) - 1);
}

std::size_t bsc_dual_bound(std::size_t n, std::size_t dd) {
    check_dual_distance(n, dd);
    return 2 * ((n + dd - 1) / dd);
}

Ray awgnc_bound_witness(std::size_t n, std::size_t dd) {
    check_dual_distance(n, dd);
    Ray x(n, 1);
    x[0] = static_cast<long long>(dd - 1);
    return x;
}

Ray bsc_bound_witness(std::size_t n, std::size_t dd) {
    check_dual_distance(n, dd);
    Ray x(n, 1);
    const std::size_t tau = (n + dd - 1) / dd;
    for (std::size_t i = 0; i < tau; ++i) {
        x[i] = static_cast<long long>(dd - 1);
    }
    return x;
}

nlohmann::json DesignParams::to_json() const {
    nlohmann::json j{{"kind", kind == Kind::bibd ? "bibd" : "partial"},
                     {"points", points},
                     {"blocks", blocks},
                     {"w_c", w_c},
                     {"lambda", lambda}};
    if (w_r) {
        j["w_r"] = *w_r;
    }
    return j;
}

std::optional<DesignParams> detect_design(const BitMatrix& h) {
    const std::size_t n = h.cols();
    if (n < 2 || h.rows() == 0) {
        return std::nullopt;
    }
    const auto cw = h.column_weights();
    if (cw[0] == 0 || std::any_of(cw.begin(), cw.end(), [&](std::size_t w) { return w != cw[0]; })) {
        return std::nullopt;
    }
    std::vector<BitVector> cols;
    for (std::size_t i = 0; i < n; ++i) {
        cols.push_back(h.column(i));
    }
    std::size_t lo = h.rows();
    std::size_t hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto c = cols[i].intersection_count(cols[j]);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
    }
    if (hi == 0) {
        return std::nullopt;
    }
    DesignParams p;
    p.points = n;
    p.blocks = h.rows();
    p.w_c = cw[0];
    p.lambda = hi;
    const auto rw = h.row_weights();
    const bool constant_rows = std::all_of(rw.begin(), rw.end(), [&](std::size_t w) { return w == rw[0]; });
    if (constant_rows && lo == hi && rw[0] >= 2 && p.w_c * (rw[0] - 1) == p.lambda * (n - 1) &&
        p.blocks * rw[0] == n * p.w_c) {
        p.kind = DesignParams::Kind::bibd;
        p.w_r = rw[0];
    }
    return p;
}

ExactRational design_lower_bound(const DesignParams& p) {
    if (p.lambda == 0) {
        throw std::invalid_argument("design bound needs lambda >= 1");
    }
    return ExactRational(1) + ExactRational(static_cast<long long>(p.w_c), static_cast<long long>(p.lambda));
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    if (n > 256) {
        throw std::invalid_argument("eigensolver supports dimension <= 256");
    }
    double scale = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) {
            throw std::invalid_argument("matrix is not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(a[i][j] - a[j][i]) > 1e-12 * (1 + std::abs(a[i][j]))) {
                throw std::invalid_argument("matrix is not symmetric");
            }
            scale += a[i][j] * a[i][j];
        }
    }
    const double tol = 1e-12 * std::max(1.0, std::sqrt(scale));
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += 2 * a[p][q] * a[p][q];
            }
        }
        if (std::sqrt(off) < tol) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev[i] = a[i][i];
    }
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

double eigenvalue_bound_from_spectrum(std::size_t n, std::size_t w_c, double mu1, double mu2) {
    return static_cast<double>(n) * (2.0 * static_cast<double>(w_c) - mu2) / (mu1 - mu2);
}

std::optional<double> second_eigenvalue(const std::vector<double>& ev) {
    if (ev.empty()) {
        return std::nullopt;
    }
    const double mu1 = ev.front();
    for (double v : ev) {
        if (v < mu1 - 1e-9 * std::abs(mu1)) {
            return v;
        }
    }
    return std::nullopt;
}

bool tanner_graph_connected(const BitMatrix& h) {
    const std::size_t n = h.cols();
    const std::size_t m = h.rows();
    if (n == 0) {
        return false;
    }
    std::vector<bool> seen_col(n, false);
    std::vector<bool> seen_row(m, false);
    std::vector<std::size_t> stack{0};
    seen_col[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto c = stack.back();
        stack.pop_back();
        for (std::size_t r = 0; r < m; ++r) {
            if (seen_row[r] || !h.get(r, c)) {
                continue;
            }
            seen_row[r] = true;
            for (auto i : h.row(r).support()) {
                if (!seen_col[i]) {
                    seen_col[i] = true;
                    ++reached;
                    stack.push_back(i);
                }
            }
        }
    }
    // Zero rows are isolated check nodes.
    return reached == n && std::all_of(seen_row.begin(), seen_row.end(), [](bool b) { return b; });
}

EigenvalueBound eigenvalue_bound(const BitMatrix& h) {
    const auto cw = h.column_weights();
    const auto rw = h.row_weights();
    if (cw.empty() || rw.empty() || std::any_of(cw.begin(), cw.end(), [&](auto w) { return w != cw[0]; }) ||
        std::any_of(rw.begin(), rw.end(), [&](auto w) { return w != rw[0]; })) {
        throw std::invalid_argument("eigenvalue bound needs a regular matrix");
    }
    if (!tanner_graph_connected(h)) {
        throw std::invalid_argument("eigenvalue bound needs a connected Tanner graph");
    }
    const auto gram = integer_gram(h);
    std::vector<std::vector<double>> l(gram.size());
    for (std::size_t i = 0; i < gram.size(); ++i) {
        l[i].assign(gram[i].begin(), gram[i].end());
    }
    const auto ev = symmetric_eigenvalues(std::move(l));
    const auto mu2 = second_eigenvalue(ev);
    if (!mu2) {
        throw std::invalid_argument("eigenvalue bound needs a second distinct eigenvalue");
    }
    EigenvalueBound b;
    b.mu1 = ev.front();
    b.mu2 = *mu2;
    b.w_c = cw[0];
    b.w_r = rw[0];
    b.value = eigenvalue_bound_from_spectrum(h.cols(), b.w_c, b.mu1, b.mu2);
    return b;
}

ExactRational bibd_closed_form(std::size_t n, std::size_t w_r, std::size_t lambda) {
    if (n < 2 || w_r < 2 || w_r > n || lambda == 0) {
        throw std::invalid_argument("BIBD needs n >= w_r >= 2 and lambda >= 1");
    }
    if ((lambda * (n - 1)) % (w_r - 1) != 0 || (lambda * n * (n - 1)) % (w_r * (w_r - 1)) != 0) {
        throw std::invalid_argument("BIBD parameter identities fail");
    }
    const auto w_c = static_cast<long long>(lambda * (n - 1) / (w_r - 1));
    const ExactRational mu1 = static_cast<long long>(w_r) * w_c;
    const ExactRational mu2 = w_c - static_cast<long long>(lambda);
    return ExactRational(static_cast<long long>(n)) * (2 * w_c - mu2) / (mu1 - mu2);
}

}  // namespace pcw
