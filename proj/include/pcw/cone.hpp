#pragma once

#include "pcw/bit_matrix.hpp"
#include "pcw/exact.hpp"

#include "json.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pcw {

using Ray = std::vector<ExactInt>;

struct ConeInequality {
    enum class Kind { check, nonnegative };
    Kind kind = Kind::nonnegative;
    std::size_t row = 0;       // check row j (check kind only)
    std::size_t position = 0;  // l for a check, i for x_i >= 0
    std::vector<int> coeffs;   // contract: coeffs . x >= 0
};

/// H-representation of K(H).
class FundamentalCone {
public:
    /// All-zero rows of H contribute nothing and are skipped.
    static FundamentalCone build(const BitMatrix& h);

    [[nodiscard]] std::size_t dimension() const { return n_; }
    [[nodiscard]] const std::vector<ConeInequality>& inequalities() const { return ineqs_; }
    [[nodiscard]] std::size_t skipped_zero_rows() const { return skipped_; }

    [[nodiscard]] bool contains(const std::vector<ExactRational>& x) const;
    [[nodiscard]] bool contains(const Ray& x) const;
    /// Rank of the inequalities tight at x.
    [[nodiscard]] std::size_t tight_rank(const Ray& x) const;

private:
    std::size_t n_ = 0;
    std::size_t skipped_ = 0;
    std::vector<ConeInequality> ineqs_;
};

class RayOverflow : public std::runtime_error {
public:
    explicit RayOverflow(std::size_t cap)
        : std::runtime_error("extreme ray count exceeded cap of " + std::to_string(cap)), cap_(cap) {}
    [[nodiscard]] std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

struct ConeOptions {
    std::size_t max_rays = 500'000;  // intermediate ray cap
    std::size_t max_dimension = 14;
};

/// Extreme rays by double description, gcd-normalized and sorted.
/// Throws RayOverflow when an intermediate list exceeds the cap.
[[nodiscard]] std::vector<Ray> extreme_rays(const FundamentalCone& k, const ConeOptions& opts = {});

/// Same contract, by solving every (n-1)-subset of inequalities (n <= 7).
[[nodiscard]] std::vector<Ray> brute_force_rays(const FundamentalCone& k);

[[nodiscard]] nlohmann::json rays_to_json(const std::vector<Ray>& rays);
[[nodiscard]] std::vector<Ray> rays_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json ray_to_json(const Ray& ray);

}  // namespace pcw
