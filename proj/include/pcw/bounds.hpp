#pragma once

#include "pcw/bit_matrix.hpp"
#include "pcw/cone.hpp"
#include "pcw/exact.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pcw {

/// Upper bound on the AWGNC minimum of every parity-check matrix: (n + d' - 2)^2 / ((d' - 1)^2 + n - 1).
[[nodiscard]] ExactRational awgnc_dual_bound(std::size_t n, std::size_t dual_distance);

/// Upper bound 2 * ceil(n / d') on the BSC minimum of every parity-check matrix.
[[nodiscard]] std::size_t bsc_dual_bound(std::size_t n, std::size_t dual_distance);

/// (d' - 1, 1, ..., 1): in every fundamental cone of the code, AWGNC weight equal to the bound.
[[nodiscard]] Ray awgnc_bound_witness(std::size_t n, std::size_t dual_distance);

/// ceil(n / d') leading entries d' - 1, the rest 1.
[[nodiscard]] Ray bsc_bound_witness(std::size_t n, std::size_t dual_distance);

struct DesignParams {
    enum class Kind { partial, bibd };
    Kind kind = Kind::partial;
    std::size_t points = 0;  // columns
    std::size_t blocks = 0;  // rows
    std::size_t w_c = 0;     // blocks through each point
    std::optional<std::size_t> w_r;  // block size, BIBD only
    std::size_t lambda = 0;  // maximum (partial) or exact (BIBD) pair coverage
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Constant column weight is required; lambda is the largest pair coverage.
/// Returns nullopt for irregular columns or when no pair of points shares a block.
[[nodiscard]] std::optional<DesignParams> detect_design(const BitMatrix& h);

/// 1 + w_c / lambda.
[[nodiscard]] ExactRational design_lower_bound(const DesignParams& p);

/// Eigenvalues of a symmetric matrix, descending, by cyclic Jacobi rotations (dimension <= 256).
[[nodiscard]] std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

/// n (2 w_c - mu2) / (mu1 - mu2).
[[nodiscard]] double eigenvalue_bound_from_spectrum(std::size_t n, std::size_t w_c, double mu1, double mu2);

/// Largest eigenvalue of a descending list below mu1 (1 - 1e-9); nullopt when none.
[[nodiscard]] std::optional<double> second_eigenvalue(const std::vector<double>& descending);

[[nodiscard]] bool tanner_graph_connected(const BitMatrix& h);

struct EigenvalueBound {
    double value = 0;
    double mu1 = 0;
    double mu2 = 0;
    std::size_t w_c = 0;
    std::size_t w_r = 0;
};

/// Lower bound on the AWGNC minimum of a (w_c, w_r)-regular matrix with connected Tanner graph.
/// Throws invalid_argument naming the failed precondition.
[[nodiscard]] EigenvalueBound eigenvalue_bound(const BitMatrix& h);

/// Exact eigenvalue bound of a (n, w_r, lambda) BIBD incidence matrix from mu1 = w_r w_c, mu2 = w_c - lambda.
/// Throws invalid_argument when the parameters do not define a BIBD.
[[nodiscard]] ExactRational bibd_closed_form(std::size_t n, std::size_t w_r, std::size_t lambda);

}  // namespace pcw
