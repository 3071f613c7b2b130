#include "pcw/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

int emit(const pcw::cli::CommandResult& r, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << r.output;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "pcw: cannot write " << out_path << "\n";
            return pcw::cli::input_error;
        }
        out << r.output;
    }
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace pcw;
    CLI::App app{"Pseudocodewords, pseudoweights and pseudocodeword redundancy of binary linear codes"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned workers = cli::default_workers();
    app.add_option("--workers", workers, "Worker threads (default: PCW_WORKERS or hardware concurrency)")
        ->check(CLI::PositiveNumber);
    std::string out_path;
    app.add_option("--out", out_path, "Write the report to a file instead of standard output");

    auto* analyze = app.add_subcommand("analyze", "Fundamental cone, extreme rays and minimum pseudoweights of H");
    std::string analyze_file;
    bool gap = false;
    std::size_t max_rays = ConeOptions{}.max_rays;
    analyze->add_option("matrix", analyze_file, "Parity-check matrix file")->required();
    analyze->add_flag("--gap", gap, "Also report the pseudoweight spectrum gap");
    analyze->add_option("--max-rays", max_rays, "Intermediate ray cap");

    auto* red = app.add_subcommand("redundancy", "Pseudocodeword redundancy of a code");
    std::string red_file;
    bool as_generator = false;
    std::vector<std::string> channel_names{"awgnc"};
    std::optional<std::size_t> max_rho;
    std::uint64_t budget = SearchBudget{}.subsets_per_level;
    std::optional<double> seconds;
    red->add_option("matrix", red_file, "Matrix file (parity-check unless --generator)")->required();
    red->add_flag("--generator", as_generator, "The file holds a generator matrix");
    red->add_option("--channel", channel_names, "bec, awgnc, bsc, maxfrac or all")->expected(1, 4);
    red->add_option("--max-rho", max_rho, "Do not search levels above this row count");
    red->add_option("--budget", budget, "Row subsets examined per level");
    red->add_option("--seconds", seconds, "Wall-clock cap per channel");

    auto* en = app.add_subcommand("enumerate", "Inequivalent [n,k] codes with d >= 3 and no zero coordinate");
    std::size_t en_n = 0;
    std::optional<std::size_t> en_k;
    en->add_option("n", en_n, "Length (<= 9)")->required();
    en->add_option("k", en_k, "Dimension (default: all)");

    auto* cs = app.add_subcommand("cyclic-scan", "Eigenvalue bound of every full circulant up to a length");
    ScanOptions scan_opts;
    bool only_sharp = false;
    cs->add_option("--n-max", scan_opts.n_max, "Largest length (<= 250)");
    cs->add_option("--n-min", scan_opts.n_min, "Smallest length");
    cs->add_flag("--only-sharp", only_sharp, "Keep records whose bound equals d");
    cs->add_flag("--all-distances", scan_opts.all_distances, "Compute d for every record within the threshold");
    cs->add_option("--distance-threshold", scan_opts.distance_threshold, "Enumeration dimension limit");

    auto* bd = app.add_subcommand("bounds", "Upper and lower bounds on minimum pseudoweights");
    std::string bd_file;
    std::optional<std::size_t> bd_n;
    std::optional<std::size_t> bd_dd;
    std::vector<std::size_t> bibd;
    bool eigen = false;
    bd->add_option("--matrix", bd_file, "Parity-check matrix file");
    bd->add_option("--n", bd_n, "Code length");
    bd->add_option("--dual-d", bd_dd, "Dual distance");
    bd->add_option("--bibd", bibd, "BIBD points, block size, lambda")->expected(3);
    bd->add_flag("--eigen", eigen, "Evaluate the eigenvalue bound of the matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::input_error;
    }

    try {
        if (*analyze) {
            cli::AnalyzeOptions opts;
            opts.spectrum_gap = gap;
            opts.cone.max_rays = max_rays;
            return emit(cli::analyze(cli::read_matrix_file(analyze_file), opts), out_path);
        }
        if (*red) {
            const auto m = cli::read_matrix_file(red_file);
            const auto code = as_generator ? LinearCode::from_generator(m) : LinearCode::from_parity_check(m);
            cli::RedundancyOptions opts;
            opts.channels.clear();
            for (const auto& name : channel_names) {
                if (name == "all") {
                    opts.channels.assign(all_channels.begin(), all_channels.end());
                    break;
                }
                opts.channels.push_back(parse_channel(name));
            }
            opts.budget.workers = workers;
            opts.budget.max_rho = max_rho;
            opts.budget.subsets_per_level = budget;
            opts.budget.seconds = seconds;
            return emit(cli::redundancy(code, opts), out_path);
        }
        if (*en) {
            return emit(cli::enumerate(en_n, en_k), out_path);
        }
        if (*cs) {
            scan_opts.workers = workers;
            return emit(cli::cyclic_scan(scan_opts, only_sharp), out_path);
        }
        if (*bd) {
            cli::BoundsRequest req;
            if (!bd_file.empty()) {
                req.matrix = cli::read_matrix_file(bd_file);
            }
            req.n = bd_n;
            req.dual_distance = bd_dd;
            if (!bibd.empty()) {
                req.bibd = cli::BibdParams{bibd[0], bibd[1], bibd[2]};
            }
            req.eigen = eigen;
            return emit(cli::bounds(req), out_path);
        }
    } catch (const cli::ParseError& e) {
        std::cerr << "pcw: " << e.what() << "\n";
        return cli::input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "pcw: " << e.what() << "\n";
        return cli::input_error;
    } catch (const std::length_error& e) {
        std::cerr << "pcw: " << e.what() << "\n";
        return cli::input_error;
    }
    return cli::input_error;
}
