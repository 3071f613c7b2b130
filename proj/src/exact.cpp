#include "pcw/exact.hpp"

#include <stdexcept>

namespace pcw {

ExactRational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return ExactRational(ExactInt(text));
        }
        ExactInt num(text.substr(0, slash));
        ExactInt den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return ExactRational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational number: " + text);
    }
}

void normalize_gcd(std::vector<ExactInt>& v) {
    ExactInt g = 0;
    for (const auto& x : v) {
        if (x != 0) {
            g = g == 0 ? ExactInt(abs(x)) : ExactInt(boost::multiprecision::gcd(g, ExactInt(abs(x))));
            if (g == 1) {
                return;
            }
        }
    }
    if (g > 1) {
        for (auto& x : v) {
            x /= g;
        }
    }
}

std::size_t rational_rank(std::vector<std::vector<ExactInt>> rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    ExactInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        // Bareiss step: entries stay integral and exact division by the previous pivot.
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                rows[r][k] = (rows[rank][c] * rows[r][k] - rows[r][c] * rows[rank][k]) / prev;
            }
            rows[r][c] = 0;
        }
        prev = rows[rank][c];
        ++rank;
    }
    return rank;
}

ExactInt integer_determinant(std::vector<std::vector<ExactInt>> a) {
    const std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    ExactInt prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            for (std::size_t k = c + 1; k < n; ++k) {
                a[r][k] = (a[c][c] * a[r][k] - a[r][c] * a[c][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[c][c];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<std::vector<ExactInt>> rational_null_space(std::vector<std::vector<ExactInt>> rows, std::size_t cols) {
    std::vector<std::vector<ExactRational>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        a.emplace_back(r.begin(), r.end());
    }
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < a.size(); ++c) {
        std::size_t pivot = lead;
        while (pivot < a.size() && a[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == a.size()) {
            continue;
        }
        std::swap(a[pivot], a[lead]);
        const ExactRational inv = 1 / a[lead][c];
        for (auto& x : a[lead]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r != lead && a[r][c] != 0) {
                const ExactRational f = a[r][c];
                for (std::size_t k = c; k < cols; ++k) {
                    a[r][k] -= f * a[lead][k];
                }
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<ExactInt>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<ExactRational> v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -a[r][free];
        }
        ExactInt den = 1;
        for (const auto& x : v) {
            den = boost::multiprecision::lcm(den, denominator(x));
        }
        std::vector<ExactInt> iv;
        iv.reserve(cols);
        for (const auto& x : v) {
            iv.push_back(numerator(x) * (den / denominator(x)));
        }
        normalize_gcd(iv);
        basis.push_back(std::move(iv));
    }
    return basis;
}

}  // namespace pcw
