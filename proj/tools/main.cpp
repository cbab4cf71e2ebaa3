#include <algorithm>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclophi/census.hpp"
#include "cyclophi/coeff_engine.hpp"
#include "cyclophi/csv_io.hpp"
#include "cyclophi/errors.hpp"
#include "cyclophi/newton_sigma.hpp"
#include "cyclophi/numthy.hpp"
#include "cyclophi/svg.hpp"
#include "cyclophi/symmetry.hpp"
#include "cyclophi/version.hpp"

namespace fs = std::filesystem;
using namespace cyclophi;

namespace {

std::string join_values(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

int cmd_coeffs(std::uint64_t n, const std::string& engine_name, fs::path output) {
    engine::CoeffVec cv;
    if (engine_name == "division")
        cv = engine::phi_poly_division(n);
    else
        cv = engine::phi_poly_series(n);

    if (output.empty()) output = io::cache_dir() / ("phi_" + std::to_string(n) + ".csv");
    io::write_coeffs_csv(output, cv);

    std::cout << "n: " << n << "\n"
              << "engine: " << (engine_name == "division" ? "division" : "series") << "\n"
              << "degree: " << cv.degree() << "\n"
              << "distinct values: " << join_values(engine::coefficient_value_set(cv)) << "\n"
              << "max |coefficient|: " << cv.max_abs_coefficient() << "\n"
              << "csv: " << output.string() << "\n";
    return io::exit_code::ok;
}

int cmd_verify(const std::vector<std::uint64_t>& primes) {
    const newton::TheoremMainReport report = newton::verify_theorem_main(primes);

    std::cout << "primes:";
    for (std::uint64_t p : report.primes) std::cout << ' ' << p;
    std::cout << "\nn: " << report.n << "\nindex: " << 2 * report.n
              << "\ndegree: " << report.degree << "\nt: " << report.t << "\nr: " << report.r
              << "\nguaranteed: " << join_values(report.guaranteed)
              << "\nextra_minus: " << (report.extra_minus ? "yes" : "no") << "\n";
    for (const auto& [value, exponent] : report.witness)
        std::cout << "witness: coefficient " << value << " at exponent " << exponent << "\n";
    std::cout << "verified: " << (report.verified ? "yes" : "no") << "\n";
    return report.verified ? io::exit_code::ok : io::exit_code::verify_failed;
}

int recheck_with_division(const fs::path& path, std::uint64_t n_limit) {
    const std::vector<census::Point> points = io::read_census_csv(path);
    std::size_t i = 0;
    for (std::uint64_t n = 1; n <= n_limit; ++n) {
        const engine::CoeffVec cv = engine::phi_poly_division(n);
        std::vector<std::int64_t> expected;
        for (std::int64_t c : engine::coefficient_value_set(cv))
            if (c < -1 || c > 1) expected.push_back(c);
        std::vector<std::int64_t> stored;
        while (i < points.size() && points[i].n == n) stored.push_back(points[i++].c);
        if (stored != expected) {
            std::cerr << "recheck failed at n = " << n << ": csv has [" << join_values(stored)
                      << "], division engine finds [" << join_values(expected) << "]\n";
            return io::exit_code::verify_failed;
        }
    }
    std::cout << "recheck: division engine agrees for all n <= " << n_limit << "\n";
    return io::exit_code::ok;
}

int cmd_census(std::uint64_t n_limit, unsigned workers, bool resume, fs::path output,
               const std::string& recheck) {
    if (output.empty()) output = io::cache_dir() / "census_B.csv";
    census::ScanOptions opts;
    opts.workers = workers;
    const io::CensusRunResult result = io::run_census_to_file(output, n_limit, opts, resume);
    std::cout << "csv: " << output.string() << "\nrows: " << result.rows
              << "\nhighest_n: " << result.highest_n << "\nresumed: "
              << (result.resumed ? "yes" : "no") << "\nalready_satisfied: "
              << (result.already_satisfied ? "yes" : "no") << "\n";
    if (!recheck.empty()) return recheck_with_division(output, n_limit);
    return io::exit_code::ok;
}

int cmd_first(std::uint64_t count, std::uint64_t n_limit, unsigned workers, fs::path output) {
    if (output.empty()) output = io::cache_dir() / "first_A.csv";
    census::ScanOptions opts;
    opts.workers = workers;
    const census::FirstAppearanceScan scan = io::run_first_to_file(output, count, n_limit, opts);
    std::cout << "csv: " << output.string() << "\nrecords: " << scan.records.size()
              << "\nscanned_to: " << scan.scanned_to << "\ncomplete: "
              << (scan.complete ? "yes" : "no") << "\n";
    if (!scan.complete) {
        std::cerr << "incomplete: found " << scan.records.size() << " of " << count
                  << " records by n = " << scan.scanned_to
                  << "; raise --n-limit to continue\n";
        return io::exit_code::incomplete;
    }
    return io::exit_code::ok;
}

io::CsvKind resolve_kind(const fs::path& input, const std::string& kind) {
    if (kind == "scatter-A") return io::CsvKind::first_a;
    if (kind == "scatter-B") return io::CsvKind::census_b;
    return io::detect_csv_kind(input);
}

int cmd_plot(const fs::path& input, const std::string& kind, fs::path output) {
    const io::CsvKind k = resolve_kind(input, kind);
    const census::PointSet points = io::read_points(input, k);
    if (output.empty()) {
        output = input;
        output.replace_extension(".svg");
    }
    svg::PlotOptions opts;
    opts.title = input.stem().string();
    svg::write_scatter(output, points.points(), opts);
    std::cout << "svg: " << output.string() << "\npoints: " << points.size() << "\n";
    return io::exit_code::ok;
}

int cmd_symmetry(const fs::path& input, const std::string& kind,
                 std::vector<std::uint64_t> cutoffs, double trim, fs::path output) {
    const io::CsvKind k = resolve_kind(input, kind);
    if (cutoffs.empty()) throw std::invalid_argument("at least one cutoff is required");

    std::vector<std::pair<std::uint64_t, census::PointSet>> series;
    if (k == io::CsvKind::first_a) {
        const auto records = io::read_first_csv(input);
        for (std::uint64_t cutoff : cutoffs) {
            if (cutoff > records.size())
                throw std::invalid_argument("cutoff " + std::to_string(cutoff) +
                                            " exceeds the " + std::to_string(records.size()) +
                                            " records in " + input.string());
            std::vector<census::FirstAppearanceRecord> head(
                records.begin(), records.begin() + static_cast<std::ptrdiff_t>(cutoff));
            series.emplace_back(cutoff, census::points_of(head));
        }
    } else {
        const std::vector<census::Point> points = io::read_census_csv(input);
        const fs::path mpath = io::manifest_path_for(input);
        if (fs::exists(mpath)) {
            const io::Manifest m = io::read_manifest(mpath);
            for (std::uint64_t cutoff : cutoffs)
                if (cutoff > m.highest_n)
                    throw std::invalid_argument(
                        "cutoff " + std::to_string(cutoff) + " exceeds the scanned range (" +
                        std::to_string(m.highest_n) + ") of " + input.string());
        }
        for (std::uint64_t cutoff : cutoffs) {
            std::vector<census::Point> kept;
            for (const census::Point& p : points)
                if (p.n <= cutoff) kept.push_back(p);
            series.emplace_back(cutoff, census::PointSet(std::move(kept)));
        }
    }

    const std::vector<symmetry::SymmetryReport> reports = symmetry::symmetry_series(series, trim);
    if (output.empty()) {
        output = input;
        output.replace_extension();
        output += "_symmetry.csv";
    }
    io::write_symmetry_csv(output, reports);

    double base = -1.0;
    for (const symmetry::SymmetryReport& r : reports) {
        std::cout << "k=" << r.cutoff << " rect=[-" << r.rect.c_k << "," << r.rect.c_k
                  << "]x[0," << r.rect.n_k << "] pos=" << r.count_pos << " neg=" << r.count_neg;
        if (r.degenerate) {
            std::cout << " degenerate\n";
            continue;
        }
        std::cout << " full=" << io::fmt_double(r.hausdorff_full)
                  << " trimmed=" << io::fmt_double(r.hausdorff_trimmed);
        if (base < 0.0 && r.hausdorff_trimmed > 0.0) base = r.hausdorff_trimmed;
        if (base > 0.0)
            std::cout << " decay=" << io::fmt_double(r.hausdorff_trimmed / base);
        std::cout << "\n";
    }
    std::cout << "csv: " << output.string() << "\n";
    return io::exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclophi: exact cyclotomic-coefficient computations, census scans, and "
                 "symmetry diagnostics"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::uint64_t n = 0, count = 0, n_limit = 0;
    std::vector<std::uint64_t> primes, cutoffs;
    std::string engine_name = "auto", kind = "auto", recheck;
    std::string output, input;
    unsigned workers = 1;
    double trim = 0.02;
    bool resume = false;

    CLI::App* coeffs = app.add_subcommand("coeffs", "Coefficient vector of one index");
    coeffs->add_option("n", n, "index")->required()->check(CLI::PositiveNumber);
    coeffs->add_option("--engine", engine_name, "series | division | auto")
        ->check(CLI::IsMember({"series", "division", "auto"}));
    coeffs->add_option("--output", output, "CSV path (default: cache dir)");

    CLI::App* verify = app.add_subcommand("verify", "Check the guaranteed coefficient range "
                                                    "for a product of odd primes");
    verify->add_option("primes", primes, "ascending odd primes, odd count >= 3")->required();

    CLI::App* censusc = app.add_subcommand("census", "Nontrivial-coefficient census (set B)");
    censusc->add_option("n_limit", n_limit, "scan indexes up to this bound")
        ->required()
        ->check(CLI::PositiveNumber);
    censusc->add_option("--workers", workers, "worker thread count")->check(CLI::PositiveNumber);
    censusc->add_flag("--resume", resume, "extend an existing scan");
    censusc->add_option("--output", output, "CSV path (default: cache dir)");
    censusc->add_option("--recheck-with", recheck, "re-derive rows with the division engine")
        ->check(CLI::IsMember({"division"}));

    CLI::App* first = app.add_subcommand("first", "First appearances of nontrivial values "
                                                  "(set A)");
    first->add_option("k", count, "number of records")->required()->check(CLI::PositiveNumber);
    first->add_option("--n-limit", n_limit, "give up past this index")
        ->check(CLI::PositiveNumber)
        ->default_val(std::uint64_t{500000});
    first->add_option("--workers", workers, "worker thread count")->check(CLI::PositiveNumber);
    first->add_option("--output", output, "CSV path (default: cache dir)");

    CLI::App* plot = app.add_subcommand("plot", "Scatter SVG from a scan CSV");
    plot->add_option("input", input, "CSV from 'first' or 'census'")
        ->required()
        ->check(CLI::ExistingFile);
    plot->add_option("--kind", kind, "auto | scatter-A | scatter-B")
        ->check(CLI::IsMember({"auto", "scatter-A", "scatter-B"}));
    plot->add_option("--output", output, "SVG path (default: input with .svg)");

    CLI::App* symmetryc = app.add_subcommand("symmetry", "Reflection-symmetry diagnostics");
    symmetryc->add_option("input", input, "CSV from 'first' or 'census'")
        ->required()
        ->check(CLI::ExistingFile);
    symmetryc->add_option("--cutoffs", cutoffs, "ascending cutoffs")
        ->required()
        ->delimiter(',');
    symmetryc->add_option("--trim", trim, "trimmed-distance fraction in [0, 0.5)");
    symmetryc->add_option("--kind", kind, "auto | scatter-A | scatter-B")
        ->check(CLI::IsMember({"auto", "scatter-A", "scatter-B"}));
    symmetryc->add_option("--output", output, "CSV path (default: derived from input)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return io::exit_code::usage;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(n, engine_name, output);
        if (verify->parsed()) return cmd_verify(primes);
        if (censusc->parsed()) return cmd_census(n_limit, workers, resume, output, recheck);
        if (first->parsed()) return cmd_first(count, n_limit, workers, output);
        if (plot->parsed()) return cmd_plot(input, kind, output);
        if (symmetryc->parsed()) return cmd_symmetry(input, kind, cutoffs, trim, output);
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return io::exit_code::overflow;
    } catch (const ManifestMismatchError& e) {
        std::cerr << "manifest mismatch: " << e.what() << "\n";
        return io::exit_code::manifest_mismatch;
    } catch (const CsvError& e) {
        std::cerr << "csv error: " << e.what() << "\n";
        return io::exit_code::io_error;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return io::exit_code::io_error;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return io::exit_code::io_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return io::exit_code::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io::exit_code::io_error;
    }
    return io::exit_code::usage;
}
