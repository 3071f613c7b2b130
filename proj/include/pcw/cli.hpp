#pragma once

#include "pcw/bit_matrix.hpp"
#include "pcw/codes.hpp"
#include "pcw/cone.hpp"
#include "pcw/cyclic.hpp"
#include "pcw/pseudoweight.hpp"
#include "pcw/redundancy.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcw::cli {

enum ExitCode : int { ok = 0, input_error = 1, overflow = 2, undetermined = 3 };

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// "m n" header, then m rows of n characters from {0,1}. Lines starting with '#' and
/// blank lines after the last row are ignored; a trailing '\r' is accepted.
[[nodiscard]] BitMatrix parse_matrix(std::string_view text);
[[nodiscard]] std::string emit_matrix(const BitMatrix& h);
/// Throws ParseError (line 0 for an unreadable file).
[[nodiscard]] BitMatrix read_matrix_file(const std::string& path);

/// PCW_WORKERS when set to a positive integer, else the hardware concurrency.
[[nodiscard]] unsigned default_workers();

struct CommandResult {
    int exit_code = ok;
    std::string output;  // report text, newline-terminated
};

struct AnalyzeOptions {
    bool spectrum_gap = false;
    ConeOptions cone;
};

/// JSON report "pcw-analyze-1"; ray overflow gives a structured error and exit code 2.
[[nodiscard]] CommandResult analyze(const BitMatrix& h, const AnalyzeOptions& opts = {});

struct RedundancyOptions {
    std::vector<Channel> channels{Channel::awgnc};
    SearchBudget budget;
};

/// Exit code 3 when some channel stays unknown.
[[nodiscard]] CommandResult redundancy(const LinearCode& c, const RedundancyOptions& opts);

/// JSON lines, one "pcw-code-1" object per code, then a "pcw-enumerate-1" summary.
/// Without k every dimension 1..n-1 is enumerated. Requires n <= 9.
[[nodiscard]] CommandResult enumerate(std::size_t n, std::optional<std::size_t> k);

/// CSV with a leading "# format: pcw-scan-1" line.
[[nodiscard]] CommandResult cyclic_scan(const ScanOptions& opts, bool only_sharp);

struct BibdParams {
    std::size_t points = 0;
    std::size_t block_size = 0;
    std::size_t lambda = 0;
};

struct BoundsRequest {
    std::optional<BitMatrix> matrix;
    std::optional<std::size_t> n;
    std::optional<std::size_t> dual_distance;
    std::optional<BibdParams> bibd;
    bool eigen = false;  // with a matrix: also evaluate the eigenvalue bound
};

/// JSON report "pcw-bounds-1"; each entry names the formula that produced it or reads "n/a: reason".
[[nodiscard]] CommandResult bounds(const BoundsRequest& req);

}  // namespace pcw::cli
