#pragma once

#include "pcw/bit_matrix.hpp"
#include "pcw/codes.hpp"
#include "pcw/cone.hpp"
#include "pcw/pseudoweight.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcw {

/// Rows are all 2^(n-k) - 1 nonzero dual codewords, sorted by weight then lexicographically.
/// Throws length_error when n - k > 16.
[[nodiscard]] BitMatrix full_dual_matrix(const LinearCode& c);

struct FinitenessResult {
    bool finite = false;
    ExactRational minimum;  // minimum pseudoweight of the full dual matrix
    Ray witness;
};

/// Pseudoredundancy is finite iff the full dual matrix reaches d: its cone is contained
/// in the cone of every parity-check matrix of the code.
[[nodiscard]] FinitenessResult is_finite(const LinearCode& c, Channel ch, const ConeOptions& opts = {});

/// True when every extreme ray of K(H) has pseudoweight >= d.
[[nodiscard]] bool achieves_distance(const BitMatrix& h, Channel ch, std::size_t d, const ConeOptions& opts = {});

struct LevelStats {
    std::size_t rho = 0;
    std::uint64_t subsets_examined = 0;
    std::uint64_t representatives = 0;  // spanning orbit representatives visited
    std::uint64_t evaluated = 0;        // representatives tested against d
    std::uint64_t successes = 0;
    bool truncated = false;
    bool deduplicated = false;  // false: representatives may repeat an equivalence class
    [[nodiscard]] nlohmann::json to_json() const;
};

struct LevelOptions {
    std::uint64_t subset_budget = 10'000'000;
    bool deduplicate = true;
};

/// Calls `visit` once per equivalence class of rho-row matrices of C with distinct nonzero
/// dual codewords as rows, spanning the dual. Classes are Aut(C)-orbits of row subsets;
/// representatives come in colex order of their row indices into sorted_dual_words(C).
/// `visit` returns false to stop. Stops with truncated = true once the subset budget runs out.
LevelStats matrices_with_rho_rows(const LinearCode& c, std::size_t rho,
                                  const std::function<bool(const BitMatrix&)>& visit,
                                  const LevelOptions& opts = {});

enum class CodeClass { c0, c1, c2, c3, at_least_2, unknown };

[[nodiscard]] std::string class_label(CodeClass c);

struct SearchBudget {
    std::uint64_t subsets_per_level = 10'000'000;
    std::optional<double> seconds;  // global wall-clock cap per search
    unsigned workers = 1;
    bool confirm_class3 = true;     // exhaustive check of level n-k, only when n-k <= 5
    std::size_t max_confirm_redundancy = 5;
    std::optional<std::size_t> max_rho;  // levels above it are not searched; the result is unknown
    ConeOptions cone;
};

struct RhoResult {
    enum class Kind { finite, infinite, unknown };
    Kind kind = Kind::unknown;
    std::size_t value = 0;  // valid when kind == finite
    std::optional<BitMatrix> witness;
    std::optional<ExactRational> full_dual_minimum;
    std::optional<Ray> infinite_witness;
    CodeClass code_class = CodeClass::unknown;
    std::string note;
    std::vector<LevelStats> levels;
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Least rho such that some rho-row matrix reaches d, searched upward from n-k.
[[nodiscard]] RhoResult pseudoredundancy(const LinearCode& c, Channel ch, const SearchBudget& budget = {});

/// Class label from the same search (rho plus the class-3 confirmation).
[[nodiscard]] CodeClass classify(const LinearCode& c, Channel ch, const SearchBudget& budget = {});

struct RedundancyReport {
    CodeKey key;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::map<Channel, RhoResult> channels;
    [[nodiscard]] nlohmann::json to_json() const;
};

[[nodiscard]] RedundancyReport redundancy_report(const LinearCode& c, std::span<const Channel> channels,
                                                 const SearchBudget& budget = {});

/// Reports for every enumerated [n,k] code, ordered by canonical key.
[[nodiscard]] std::vector<RedundancyReport> batch_report(std::size_t n, std::size_t k,
                                                         std::span<const Channel> channels,
                                                         const SearchBudget& budget = {},
                                                         const EnumerationOptions& enumeration = {});

/// "m n" header followed by one row per line.
[[nodiscard]] std::string matrix_text(const BitMatrix& h);

}  // namespace pcw
