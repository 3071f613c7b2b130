#pragma once

#include "pcw/bit_matrix.hpp"
#include "pcw/cone.hpp"
#include "pcw/exact.hpp"

#include "json.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcw {

enum class Channel { bec, awgnc, bsc, maxfrac };

inline constexpr std::array<Channel, 4> all_channels{Channel::bec, Channel::awgnc, Channel::bsc, Channel::maxfrac};

[[nodiscard]] std::string_view channel_name(Channel c);
/// Accepts "bec", "awgnc", "bsc", "maxfrac" (also "max-frac").
[[nodiscard]] Channel parse_channel(std::string_view name);

// The functionals take a nonnegative vector; the zero vector maps to 0.

[[nodiscard]] ExactRational w_bec(const std::vector<ExactRational>& x);
[[nodiscard]] ExactRational w_awgnc(const std::vector<ExactRational>& x);
[[nodiscard]] ExactRational w_bsc(const std::vector<ExactRational>& x);
[[nodiscard]] ExactRational w_maxfrac(const std::vector<ExactRational>& x);
[[nodiscard]] ExactRational pseudoweight(Channel c, const std::vector<ExactRational>& x);
[[nodiscard]] ExactRational pseudoweight(Channel c, const Ray& x);

[[nodiscard]] std::vector<ExactRational> to_rational(const Ray& x);

struct ChannelMinimum {
    ExactRational value;
    Ray witness;
};

struct PseudoweightReport {
    std::size_t n = 0;
    std::size_t rows = 0;
    std::size_t ray_count = 0;
    std::array<ChannelMinimum, 4> minima;  // indexed by Channel

    [[nodiscard]] const ChannelMinimum& at(Channel c) const { return minima[static_cast<std::size_t>(c)]; }
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Per-channel minima over a ray list; ties go to the lexicographically least ray.
[[nodiscard]] PseudoweightReport minima_over_rays(const std::vector<Ray>& rays, std::size_t n);

/// Minimum pseudoweights of H over the extreme rays of K(H).
[[nodiscard]] PseudoweightReport min_pseudoweights(const BitMatrix& h, const ConeOptions& opts = {});

/// Called after every min_pseudoweights computation; pass an empty function to remove.
/// The observer may run concurrently from several threads.
void set_minima_observer(std::function<void(const BitMatrix&, const PseudoweightReport&)> observer);

/// True when the ray is a positive multiple of a codeword of ker H.
[[nodiscard]] bool is_codeword_multiple(const BitMatrix& h, const Ray& ray);

/// Minimum of (weight - d) over rays that are not codeword multiples;
/// nullopt stands for +infinity. Requires d(ker H) to be enumerable.
[[nodiscard]] std::optional<ExactRational> spectrum_gap(const BitMatrix& h, Channel c, const ConeOptions& opts = {});
[[nodiscard]] std::optional<ExactRational> spectrum_gap(const BitMatrix& h, Channel c, const std::vector<Ray>& rays,
                                                        std::size_t d);

}  // namespace pcw
