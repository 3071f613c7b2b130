#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace pcw {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const ExactRational& q) { return q.str(); }
inline std::string to_string(const ExactInt& z) { return z.str(); }

/// Parses "p" or "p/q".
ExactRational parse_rational(const std::string& text);

inline ExactRational make_rational(long long num, long long den = 1) { return ExactRational(num, den); }

/// Divides every entry by the gcd of the entries (kept nonnegative when the input is).
void normalize_gcd(std::vector<ExactInt>& v);

/// Rank over Q of an integer matrix (fraction-free elimination).
std::size_t rational_rank(std::vector<std::vector<ExactInt>> rows);

/// Determinant of a square integer matrix (fraction-free elimination).
ExactInt integer_determinant(std::vector<std::vector<ExactInt>> a);

/// Basis of the rational null space of an integer matrix with `cols` columns,
/// scaled to primitive integer vectors.
std::vector<std::vector<ExactInt>> rational_null_space(std::vector<std::vector<ExactInt>> rows, std::size_t cols);

}  // namespace pcw
