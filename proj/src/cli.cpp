#include "pcw/cli.hpp"

#include "pcw/bounds.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace pcw::cli {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Eigenvalue fields carry 9 significant digits so reports stay byte-stable.
double nine_digits(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::strtod(buf, nullptr);
}

std::optional<std::string> regularity_failure(const BitMatrix& h) {
    const auto cw = h.column_weights();
    const auto rw = h.row_weights();
    auto constant = [](const std::vector<std::size_t>& v) {
        return !v.empty() && std::all_of(v.begin(), v.end(), [&](std::size_t x) { return x == v[0]; });
    };
    if (!constant(cw) || !constant(rw)) {
        return "not regular";
    }
    if (!tanner_graph_connected(h)) {
        return "Tanner graph not connected";
    }
    return std::nullopt;
}

json eigen_entry(const BitMatrix& h) {
    if (auto why = regularity_failure(h)) {
        return "n/a: " + *why;
    }
    try {
        const auto b = eigenvalue_bound(h);
        return {{"formula", "n (2 w_c - mu2) / (mu1 - mu2)"},
                {"value", nine_digits(b.value)},
                {"mu1", nine_digits(b.mu1)},
                {"mu2", nine_digits(b.mu2)},
                {"w_c", b.w_c},
                {"w_r", b.w_r}};
    } catch (const std::invalid_argument&) {
        return "n/a: single eigenvalue";
    }
}

json design_entry(const BitMatrix& h) {
    const auto p = detect_design(h);
    if (!p) {
        return "n/a: no design structure";
    }
    return {{"formula", "1 + w_c / lambda"}, {"value", to_string(design_lower_bound(*p))}, {"design", p->to_json()}};
}

json dual_entries(std::size_t n, std::size_t dd) {
    json j;
    if (n >= 2 || dd >= 2) {
        j["awgnc_dual"] = {{"formula", "(n + d' - 2)^2 / ((d' - 1)^2 + n - 1)"},
                           {"value", to_string(awgnc_dual_bound(n, dd))}};
    } else {
        j["awgnc_dual"] = "n/a: undefined for n = 1";
    }
    j["bsc_dual"] = {{"formula", "2 ceil(n / d')"}, {"value", bsc_dual_bound(n, dd)}};
    return j;
}

CommandResult error_result(int code, const std::string& kind, const std::string& message, const std::string& format) {
    json j{{"format", format}, {"error", {{"kind", kind}, {"message", message}}}};
    return {code, dump(j)};
}

}  // namespace

BitMatrix parse_matrix(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto end = text.find('\n', start);
            std::string line(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            lines.push_back(std::move(line));
            if (end == std::string_view::npos) {
                break;
            }
            start = end + 1;
        }
    }
    std::size_t i = 0;
    auto skip_comments = [&] {
        while (i < lines.size() && !lines[i].empty() && lines[i][0] == '#') {
            ++i;
        }
    };
    skip_comments();
    if (i == lines.size() || lines[i].empty()) {
        throw ParseError(i + 1, "expected header \"m n\"");
    }
    std::size_t m = 0;
    std::size_t n = 0;
    {
        std::istringstream in(lines[i]);
        std::string extra;
        const bool digits_only =
            std::all_of(lines[i].begin(), lines[i].end(), [](char c) { return c == ' ' || (c >= '0' && c <= '9'); });
        if (!digits_only || !(in >> m >> n) || (in >> extra)) {
            throw ParseError(i + 1, "malformed header \"" + lines[i] + "\", expected \"m n\"");
        }
    }
    if (n == 0) {
        throw ParseError(i + 1, "matrix must have at least one column");
    }
    ++i;
    BitMatrix h(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        skip_comments();
        if (i == lines.size()) {
            throw ParseError(i, "expected " + std::to_string(m) + " rows, found " + std::to_string(r));
        }
        const auto& line = lines[i];
        if (line.size() != n) {
            throw ParseError(i + 1, "row has " + std::to_string(line.size()) + " characters, expected " + std::to_string(n));
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (line[c] == '1') {
                h.set(r, c);
            } else if (line[c] != '0') {
                throw ParseError(i + 1, std::string("unexpected character '") + line[c] + "'");
            }
        }
        ++i;
    }
    for (; i < lines.size(); ++i) {
        if (!lines[i].empty() && lines[i][0] != '#') {
            throw ParseError(i + 1, "unexpected content after the last row");
        }
    }
    return h;
}

std::string emit_matrix(const BitMatrix& h) { return matrix_text(h); }

BitMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

unsigned default_workers() {
    if (const char* env = std::getenv("PCW_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CommandResult analyze(const BitMatrix& h, const AnalyzeOptions& opts) {
    const std::string format = "pcw-analyze-1";
    const auto cone = FundamentalCone::build(h);
    std::vector<Ray> rays;
    try {
        rays = extreme_rays(cone, opts.cone);
    } catch (const RayOverflow& e) {
        json j{{"format", format},
               {"error", {{"kind", "ray_overflow"}, {"cap", e.cap()}, {"message", e.what()}}}};
        return {overflow, dump(j)};
    } catch (const std::invalid_argument& e) {
        return error_result(input_error, "unsupported", e.what(), format);
    }
    json j;
    j["format"] = format;
    j["n"] = h.cols();
    j["rows"] = h.rows();
    j["inequalities"] = cone.inequalities().size();
    j["ray_count"] = rays.size();
    const auto code = LinearCode::from_parity_check(h);
    std::optional<std::size_t> d;
    if (code.dimension() > 0) {
        d = min_distance_either_side(code);
    }
    j["k"] = code.dimension();
    j["d"] = nullptr;
    std::size_t dist = 0;
    if (d) {
        dist = *d;
        j["d"] = dist;
    }
    if (rays.empty()) {
        j["minima"] = nullptr;
    } else {
        j["minima"] = minima_over_rays(rays, h.cols()).to_json()["minima"];
    }
    if (opts.spectrum_gap) {
        for (auto c : all_channels) {
            const std::string name(channel_name(c));
            if (!d || rays.empty()) {
                j["spectrum_gap"][name] = "n/a: minimum distance unavailable";
                continue;
            }
            const auto g = spectrum_gap(h, c, rays, dist);
            j["spectrum_gap"][name] = g ? to_string(*g) : "infinite";
        }
    }
    j["eigenvalue_bound"] = eigen_entry(h);
    j["design_bound"] = design_entry(h);
    return {ok, dump(j)};
}

CommandResult redundancy(const LinearCode& c, const RedundancyOptions& opts) {
    if (c.dimension() == 0) {
        return error_result(input_error, "invalid_code", "the zero code has no minimum distance", "pcw-redundancy-1");
    }
    const auto rep = redundancy_report(c, opts.channels, opts.budget);
    bool unknown = false;
    for (const auto& [ch, res] : rep.channels) {
        unknown = unknown || res.kind == RhoResult::Kind::unknown;
    }
    return {unknown ? undetermined : ok, dump(rep.to_json())};
}

CommandResult enumerate(std::size_t n, std::optional<std::size_t> k) {
    if (n < 1 || n > 9 || (k && (*k < 1 || *k >= n))) {
        return error_result(input_error, "invalid_argument", "enumeration needs n <= 9 and 1 <= k < n",
                            "pcw-enumerate-1");
    }
    std::string out;
    json counts = json::object();
    std::size_t total = 0;
    for (std::size_t kk = k.value_or(1); kk <= k.value_or(n - 1); ++kk) {
        const auto codes = enumerate_codes(n, kk);
        for (const auto& c : codes) {
            auto rows = json::array();
            for (const auto& r : c.generator().row_vectors()) {
                rows.push_back(r.to_string());
            }
            json line{{"format", "pcw-code-1"},
                      {"n", n},
                      {"k", kk},
                      {"d", *c.min_distance()},
                      {"key", code_canonical_key(c).to_string()},
                      {"generator", rows}};
            out += line.dump() + "\n";
        }
        if (!codes.empty()) {
            counts[std::to_string(kk)] = codes.size();
        }
        total += codes.size();
    }
    json summary{{"format", "pcw-enumerate-1"}, {"n", n}, {"counts", counts}, {"total", total}};
    out += summary.dump() + "\n";
    return {ok, out};
}

CommandResult cyclic_scan(const ScanOptions& opts, bool only_sharp) {
    if (opts.n_max > 250) {
        return {input_error, "# error: n-max must not exceed 250\n"};
    }
    std::string out = "# format: pcw-scan-1\n" + scan_csv_header() + "\n";
    for (const auto& r : scan(opts)) {
        if (!only_sharp || r.sharp) {
            out += scan_csv_row(r) + "\n";
        }
    }
    return {ok, out};
}

CommandResult bounds(const BoundsRequest& req) {
    const std::string format = "pcw-bounds-1";
    json j;
    j["format"] = format;
    json entries = json::object();
    if (req.n || req.dual_distance) {
        if (!req.n || !req.dual_distance) {
            return error_result(input_error, "invalid_argument", "--n and --dual-d go together", format);
        }
        if (*req.dual_distance < 1 || *req.dual_distance > *req.n) {
            return error_result(input_error, "invalid_argument", "dual distance must lie in [1, n]", format);
        }
        j["n"] = *req.n;
        j["dual_distance"] = *req.dual_distance;
        entries.update(dual_entries(*req.n, *req.dual_distance));
    }
    if (req.matrix) {
        const auto& h = *req.matrix;
        const auto code = LinearCode::from_parity_check(h);
        const auto dual = code.dual();
        j["matrix"] = {{"rows", h.rows()}, {"n", h.cols()}};
        const auto dd = dual.dimension() == 0 ? std::nullopt : min_distance_either_side(dual);
        if (dd) {
            j["matrix"]["dual_distance"] = *dd;
            for (auto& [name, v] : dual_entries(h.cols(), *dd).items()) {
                entries["matrix_" + name] = v;
            }
        } else {
            entries["matrix_awgnc_dual"] = "n/a: dual distance unavailable";
            entries["matrix_bsc_dual"] = "n/a: dual distance unavailable";
        }
        entries["design"] = design_entry(h);
        if (req.eigen) {
            entries["eigenvalue"] = eigen_entry(h);
        }
    }
    if (req.bibd) {
        const auto& b = *req.bibd;
        j["bibd"] = {{"points", b.points}, {"block_size", b.block_size}, {"lambda", b.lambda}};
        try {
            entries["bibd_eigenvalue"] = {{"formula", "n (2 w_c - mu2) / (mu1 - mu2), mu1 = w_r w_c, mu2 = w_c - lambda"},
                                          {"value", to_string(bibd_closed_form(b.points, b.block_size, b.lambda))}};
            const std::size_t w_c = b.lambda * (b.points - 1) / (b.block_size - 1);
            DesignParams p;
            p.kind = DesignParams::Kind::bibd;
            p.points = b.points;
            p.blocks = b.points * w_c / b.block_size;
            p.w_c = w_c;
            p.w_r = b.block_size;
            p.lambda = b.lambda;
            entries["bibd_design"] = {{"formula", "1 + w_c / lambda"},
                                      {"value", to_string(design_lower_bound(p))},
                                      {"design", p.to_json()}};
        } catch (const std::invalid_argument& e) {
            entries["bibd_eigenvalue"] = std::string("n/a: ") + e.what();
            entries["bibd_design"] = std::string("n/a: ") + e.what();
        }
    }
    if (entries.empty()) {
        return error_result(input_error, "invalid_argument", "no bound inputs given", format);
    }
    j["bounds"] = entries;
    return {ok, dump(j)};
}

}  // namespace pcw::cli
