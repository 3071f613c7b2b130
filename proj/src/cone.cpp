#include "pcw/cone.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pcw {

FundamentalCone FundamentalCone::build(const BitMatrix& h) {
    FundamentalCone k;
    k.n_ = h.cols();
    for (std::size_t j = 0; j < h.rows(); ++j) {
        const auto support = h.row(j).support();
        if (support.empty()) {
            ++k.skipped_;
            continue;
        }
        for (auto l : support) {
            ConeInequality q;
            q.kind = ConeInequality::Kind::check;
            q.row = j;
            q.position = l;
            q.coeffs.assign(k.n_, 0);
            for (auto i : support) {
                q.coeffs[i] = 1;
            }
            q.coeffs[l] = -1;
            k.ineqs_.push_back(std::move(q));
        }
    }
    for (std::size_t i = 0; i < k.n_; ++i) {
        ConeInequality q;
        q.position = i;
        q.coeffs.assign(k.n_, 0);
        q.coeffs[i] = 1;
        k.ineqs_.push_back(std::move(q));
    }
    return k;
}

bool FundamentalCone::contains(const std::vector<ExactRational>& x) const {
    if (x.size() != n_) {
        return false;
    }
    for (const auto& q : ineqs_) {
        ExactRational s = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (q.coeffs[i] != 0) {
                s += q.coeffs[i] * x[i];
            }
        }
        if (s < 0) {
            return false;
        }
    }
    return true;
}

bool FundamentalCone::contains(const Ray& x) const {
    return contains(std::vector<ExactRational>(x.begin(), x.end()));
}

std::size_t FundamentalCone::tight_rank(const Ray& x) const {
    std::vector<std::vector<ExactInt>> tight;
    for (const auto& q : ineqs_) {
        ExactInt s = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (q.coeffs[i] != 0) {
                s += q.coeffs[i] * x[i];
            }
        }
        if (s == 0) {
            tight.emplace_back(q.coeffs.begin(), q.coeffs.end());
        }
    }
    return rational_rank(std::move(tight));
}

namespace {

struct SparseRow {
    std::vector<std::pair<std::size_t, int>> terms;
};

struct DdRay {
    Ray x;
    BitVector zeros;  // processed inequalities tight at x
};

ExactInt evaluate(const SparseRow& a, const Ray& x) {
    ExactInt s = 0;
    for (const auto& [i, c] : a.terms) {
        if (c > 0) {
            s += x[i];
        } else {
            s -= x[i];
        }
    }
    return s;
}

// Distinct inequalities, nonnegativity first, then checks by increasing support.
std::vector<SparseRow> insertion_order(const FundamentalCone& k) {
    std::set<std::vector<int>> seen;
    std::vector<std::pair<std::size_t, std::vector<int>>> checks;
    std::vector<SparseRow> rows;
    for (const auto& q : k.inequalities()) {
        if (!seen.insert(q.coeffs).second) {
            continue;
        }
        if (q.kind == ConeInequality::Kind::nonnegative) {
            continue;
        }
        const auto support =
            static_cast<std::size_t>(std::count_if(q.coeffs.begin(), q.coeffs.end(), [](int c) { return c != 0; }));
        checks.emplace_back(support, q.coeffs);
    }
    std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < k.dimension(); ++i) {
        rows.push_back(SparseRow{{{i, 1}}});
    }
    for (const auto& [s, coeffs] : checks) {
        SparseRow r;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] != 0) {
                r.terms.emplace_back(i, coeffs[i]);
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

std::vector<Ray> extreme_rays(const FundamentalCone& k, const ConeOptions& opts) {
    const std::size_t n = k.dimension();
    if (n == 0) {
        return {};
    }
    if (n > opts.max_dimension) {
        throw std::invalid_argument("cone dimension " + std::to_string(n) + " exceeds the configured limit");
    }
    const auto rows = insertion_order(k);
    const std::size_t m = rows.size();
    std::vector<DdRay> rays;
    for (std::size_t i = 0; i < n; ++i) {
        DdRay r{Ray(n, 0), BitVector(m)};
        r.x[i] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                r.zeros.set(j);
            }
        }
        rays.push_back(std::move(r));
    }
    const std::size_t need = n >= 2 ? n - 2 : 0;
    for (std::size_t idx = n; idx < m; ++idx) {
        const auto& a = rows[idx];
        std::vector<ExactInt> val(rays.size());
        std::vector<std::size_t> pos;
        std::vector<std::size_t> neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = evaluate(a, rays[r].x);
            if (val[r] > 0) {
                pos.push_back(r);
            } else if (val[r] < 0) {
                neg.push_back(r);
            }
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r) {
                if (val[r] == 0) {
                    rays[r].zeros.set(idx);
                }
            }
            continue;
        }
        std::vector<DdRay> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (val[r] >= 0) {
                next.push_back(rays[r]);
                if (val[r] == 0) {
                    next.back().zeros.set(idx);
                }
            }
        }
        for (auto p : pos) {
            for (auto q : neg) {
                const BitVector common = rays[p].zeros & rays[q].zeros;
                if (common.weight() < need) {
                    continue;
                }
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t != p && t != q && common.subset_of(rays[t].zeros)) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                DdRay r{Ray(n), common};
                const ExactInt& ap = val[p];
                const ExactInt aq = -val[q];
                for (std::size_t i = 0; i < n; ++i) {
                    r.x[i] = ap * rays[q].x[i] + aq * rays[p].x[i];
                }
                normalize_gcd(r.x);
                r.zeros.set(idx);
                next.push_back(std::move(r));
                if (next.size() > opts.max_rays) {
                    throw RayOverflow(opts.max_rays);
                }
            }
        }
        rays = std::move(next);
    }
    std::vector<Ray> out;
    out.reserve(rays.size());
    for (auto& r : rays) {
        out.push_back(std::move(r.x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Ray> brute_force_rays(const FundamentalCone& k) {
    const std::size_t n = k.dimension();
    if (n > 7) {
        throw std::invalid_argument("brute-force ray enumeration supports n <= 7");
    }
    if (n == 0) {
        return {};
    }
    std::vector<std::vector<int>> ineqs;
    {
        std::set<std::vector<int>> seen;
        for (const auto& q : k.inequalities()) {
            if (seen.insert(q.coeffs).second) {
                ineqs.push_back(q.coeffs);
            }
        }
    }
    const std::size_t m = ineqs.size();
    std::set<Ray> found;
    auto feasible = [&](const Ray& v) {
        for (const auto& q : ineqs) {
            ExactInt s = 0;
            for (std::size_t i = 0; i < n; ++i) {
                s += q[i] * v[i];
            }
            if (s < 0) {
                return false;
            }
        }
        return true;
    };
    if (n == 1) {
        Ray one{1};
        if (feasible(one)) {
            found.insert(one);
        }
        return {found.begin(), found.end()};
    }
    std::vector<std::size_t> pick(n - 1);
    std::iota(pick.begin(), pick.end(), 0);
    if (m < n - 1) {
        return {};
    }
    while (true) {
        // A kernel vector of an (n-1) x n matrix of rank n-1 is its vector of signed maximal minors.
        Ray v(n);
        bool nonzero = false;
        for (std::size_t drop = 0; drop < n; ++drop) {
            std::vector<std::vector<ExactInt>> minor;
            for (auto i : pick) {
                std::vector<ExactInt> row;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != drop) {
                        row.emplace_back(ineqs[i][c]);
                    }
                }
                minor.push_back(std::move(row));
            }
            v[drop] = integer_determinant(std::move(minor));
            if (drop % 2 == 1) {
                v[drop] = -v[drop];
            }
            nonzero = nonzero || v[drop] != 0;
        }
        if (nonzero) {
            for (int sign = 0; sign < 2; ++sign) {
                if (feasible(v)) {
                    Ray w = v;
                    normalize_gcd(w);
                    found.insert(w);
                }
                for (auto& z : v) {
                    z = -z;
                }
            }
        }
        std::size_t i = n - 1;
        while (i > 0 && pick[i - 1] == m - (n - 1) + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < n - 1; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return {found.begin(), found.end()};
}

nlohmann::json ray_to_json(const Ray& ray) {
    auto arr = nlohmann::json::array();
    for (const auto& z : ray) {
        arr.push_back(z.str());
    }
    return arr;
}

nlohmann::json rays_to_json(const std::vector<Ray>& rays) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rays) {
        arr.push_back(ray_to_json(r));
    }
    return arr;
}

std::vector<Ray> rays_from_json(const nlohmann::json& j) {
    std::vector<Ray> out;
    for (const auto& r : j) {
        Ray ray;
        for (const auto& z : r) {
            ray.emplace_back(z.get<std::string>());
        }
        out.push_back(std::move(ray));
    }
    return out;
}

}  // namespace pcw
