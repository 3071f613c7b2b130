#include "pcw/pseudoweight.hpp"

#include "pcw/codes.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace pcw {

std::string_view channel_name(Channel c) {
    switch (c) {
        case Channel::bec:
            return "bec";
        case Channel::awgnc:
            return "awgnc";
        case Channel::bsc:
            return "bsc";
        case Channel::maxfrac:
            return "maxfrac";
    }
    return "?";
}

Channel parse_channel(std::string_view name) {
    if (name == "bec") {
        return Channel::bec;
    }
    if (name == "awgnc" || name == "awgn") {
        return Channel::awgnc;
    }
    if (name == "bsc") {
        return Channel::bsc;
    }
    if (name == "maxfrac" || name == "max-frac") {
        return Channel::maxfrac;
    }
    throw std::invalid_argument("unknown channel: " + std::string(name));
}

namespace {

template <class T>
void require_nonnegative(const std::vector<T>& x) {
    for (const auto& v : x) {
        if (v < 0) {
            throw std::domain_error("pseudoweights are defined on nonnegative vectors");
        }
    }
}

// Shared by the integer and rational entry points; T is ExactInt or ExactRational.
template <class T>
ExactRational bec_of(const std::vector<T>& x) {
    return static_cast<long long>(std::count_if(x.begin(), x.end(), [](const T& v) { return v > 0; }));
}

template <class T>
ExactRational awgnc_of(const std::vector<T>& x) {
    T sum = 0;
    T sq = 0;
    for (const auto& v : x) {
        sum += v;
        sq += v * v;
    }
    if (sq == 0) {
        return 0;
    }
    return ExactRational(sum * sum) / ExactRational(sq);
}

template <class T>
ExactRational maxfrac_of(const std::vector<T>& x) {
    T sum = 0;
    T mx = 0;
    for (const auto& v : x) {
        sum += v;
        if (v > mx) {
            mx = v;
        }
    }
    if (mx == 0) {
        return 0;
    }
    return ExactRational(sum) / ExactRational(mx);
}

template <class T>
ExactRational bsc_of(std::vector<T> x) {
    std::sort(x.begin(), x.end(), std::greater<>());
    T sum = 0;
    for (const auto& v : x) {
        sum += v;
    }
    if (sum == 0) {
        return 0;
    }
    // least i with 2 Phi(i) >= S
    T phi = 0;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        const T prev = phi;
        phi += x[i - 1];
        if (2 * phi >= sum) {
            return ExactRational(2 * static_cast<long long>(i - 1)) + ExactRational(sum - 2 * prev) / ExactRational(x[i - 1]);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ExactRational w_bec(const std::vector<ExactRational>& x) {
    require_nonnegative(x);
    return bec_of(x);
}

ExactRational w_awgnc(const std::vector<ExactRational>& x) {
    require_nonnegative(x);
    return awgnc_of(x);
}

ExactRational w_bsc(const std::vector<ExactRational>& x) {
    require_nonnegative(x);
    return bsc_of(x);
}

ExactRational w_maxfrac(const std::vector<ExactRational>& x) {
    require_nonnegative(x);
    return maxfrac_of(x);
}

ExactRational pseudoweight(Channel c, const std::vector<ExactRational>& x) {
    switch (c) {
        case Channel::bec:
            return w_bec(x);
        case Channel::awgnc:
            return w_awgnc(x);
        case Channel::bsc:
            return w_bsc(x);
        case Channel::maxfrac:
            return w_maxfrac(x);
    }
    throw std::logic_error("unknown channel");
}

ExactRational pseudoweight(Channel c, const Ray& x) {
    require_nonnegative(x);
    switch (c) {
        case Channel::bec:
            return bec_of(x);
        case Channel::awgnc:
            return awgnc_of(x);
        case Channel::bsc:
            return bsc_of(x);
        case Channel::maxfrac:
            return maxfrac_of(x);
    }
    throw std::logic_error("unknown channel");
}

std::vector<ExactRational> to_rational(const Ray& x) { return {x.begin(), x.end()}; }

PseudoweightReport minima_over_rays(const std::vector<Ray>& rays, std::size_t n) {
    if (rays.empty()) {
        throw std::invalid_argument("cone has no extreme rays");
    }
    PseudoweightReport rep;
    rep.n = n;
    rep.ray_count = rays.size();
    for (auto c : all_channels) {
        auto& slot = rep.minima[static_cast<std::size_t>(c)];
        bool first = true;
        for (const auto& r : rays) {
            auto w = pseudoweight(c, r);
            if (first || w < slot.value || (w == slot.value && r < slot.witness)) {
                slot.value = std::move(w);
                slot.witness = r;
                first = false;
            }
        }
    }
    return rep;
}

namespace {

std::mutex observer_mutex;
std::shared_ptr<const std::function<void(const BitMatrix&, const PseudoweightReport&)>> observer;

}  // namespace

void set_minima_observer(std::function<void(const BitMatrix&, const PseudoweightReport&)> f) {
    std::lock_guard lock(observer_mutex);
    if (f) {
        observer = std::make_shared<const std::function<void(const BitMatrix&, const PseudoweightReport&)>>(std::move(f));
    } else {
        observer.reset();
    }
}

PseudoweightReport min_pseudoweights(const BitMatrix& h, const ConeOptions& opts) {
    auto rep = minima_over_rays(extreme_rays(FundamentalCone::build(h), opts), h.cols());
    rep.rows = h.rows();
    std::shared_ptr<const std::function<void(const BitMatrix&, const PseudoweightReport&)>> f;
    {
        std::lock_guard lock(observer_mutex);
        f = observer;
    }
    if (f) {
        (*f)(h, rep);
    }
    return rep;
}

nlohmann::json PseudoweightReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["rows"] = rows;
    j["ray_count"] = ray_count;
    for (auto c : all_channels) {
        const auto& m = at(c);
        j["minima"][std::string(channel_name(c))] = {{"value", to_string(m.value)}, {"witness", ray_to_json(m.witness)}};
    }
    return j;
}

bool is_codeword_multiple(const BitMatrix& h, const Ray& ray) {
    BitVector support(ray.size());
    const ExactInt* level = nullptr;
    for (std::size_t i = 0; i < ray.size(); ++i) {
        if (ray[i] != 0) {
            if (level != nullptr && ray[i] != *level) {
                return false;
            }
            level = &ray[i];
            support.set(i);
        }
    }
    return level != nullptr && h.multiply(support).is_zero();
}

std::optional<ExactRational> spectrum_gap(const BitMatrix& h, Channel c, const std::vector<Ray>& rays, std::size_t d) {
    std::optional<ExactRational> best;
    for (const auto& r : rays) {
        if (is_codeword_multiple(h, r)) {
            continue;
        }
        auto g = pseudoweight(c, r) - static_cast<long long>(d);
        if (!best || g < *best) {
            best = std::move(g);
        }
    }
    return best;
}

std::optional<ExactRational> spectrum_gap(const BitMatrix& h, Channel c, const ConeOptions& opts) {
    const auto code = LinearCode::from_parity_check(h);
    const auto d = code.min_distance();
    if (!d) {
        throw std::domain_error("minimum distance unavailable for spectrum gap");
    }
    return spectrum_gap(h, c, extreme_rays(FundamentalCone::build(h), opts), *d);
}

}  // namespace pcw
