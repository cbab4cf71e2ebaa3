#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cyclophi/census.hpp"
#include "cyclophi/coeff_engine.hpp"
#include "cyclophi/symmetry.hpp"

namespace cyclophi::io {

// Process exit statuses shared by the CLI and its tests.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int incomplete = 3;
inline constexpr int overflow = 4;
inline constexpr int verify_failed = 5;
inline constexpr int io_error = 6;
inline constexpr int manifest_mismatch = 7;
}  // namespace exit_code

// Fixed "%.12g" rendering with normalized specials ("nan", "inf", "-inf"),
// so emitted CSV bytes are reproducible.
std::string fmt_double(double v);

inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;

// FNV-1a 64-bit, streamable: feed the previous return value back as `state`.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state = kFnvOffset);

// Sidecar metadata for a persisted scan, enabling integrity-checked resume.
struct Manifest {
    std::string kind;           // "census-B" or "first-A"
    std::string engine;         // engine version the data was produced with
    std::uint64_t highest_n = 0;  // highest fully-scanned index
    std::uint64_t rows = 0;       // data rows in the CSV (header excluded)
    std::uint64_t checksum = 0;   // FNV-1a-64 over the entire CSV byte stream
    bool complete = true;         // first-A only: requested count was reached

    friend bool operator==(const Manifest&, const Manifest&) = default;
};

std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path);
Manifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const Manifest& m);

// Scratch directory for generated datasets; CYCLOPHI_CACHE_DIR overrides the
// default ./.cyclophi-cache/. Created on first use.
std::filesystem::path cache_dir();

inline constexpr std::string_view kCensusHeader = "n,c";
inline constexpr std::string_view kFirstHeader = "ordinal,c,n";
inline constexpr std::string_view kCoeffsHeader = "exponent,coefficient";
inline constexpr std::string_view kSymmetryHeader =
    "k,c_k,n_k,count_pos,count_neg,hausdorff_full,hausdorff_trimmed,trim,degenerate";

void write_coeffs_csv(const std::filesystem::path& path, const engine::CoeffVec& cv);
void write_symmetry_csv(const std::filesystem::path& path,
                        const std::vector<symmetry::SymmetryReport>& reports);

// Strict readers: exact header, exact column count, integer fields with no
// padding, ordering invariants enforced. Violations raise CsvError with a
// 1-based line number.
std::vector<census::FirstAppearanceRecord> read_first_csv(const std::filesystem::path& path);
std::vector<census::Point> read_census_csv(const std::filesystem::path& path);

enum class CsvKind { first_a, census_b };

// Classify a data file by its header line.
CsvKind detect_csv_kind(const std::filesystem::path& path);

// Points for the symmetry/plot pipeline regardless of which scan wrote the file.
census::PointSet read_points(const std::filesystem::path& path, CsvKind kind);

struct CensusRunResult {
    std::uint64_t highest_n = 0;
    std::uint64_t rows = 0;
    bool resumed = false;            // appended to an existing verified file
    bool already_satisfied = false;  // existing file already covered n_limit
};

// Write (or, with resume, extend) the B census CSV and its manifest. The
// bytes produced for a given n_limit are identical whether the file was
// written in one pass or grown across resumed runs.
CensusRunResult run_census_to_file(const std::filesystem::path& path, std::uint64_t n_limit,
                                   const census::ScanOptions& opts, bool resume);

// Write the A CSV for the first `count` records; incomplete scans still
// persist what was found, with the manifest marked incomplete.
census::FirstAppearanceScan run_first_to_file(const std::filesystem::path& path,
                                              std::uint64_t count, std::uint64_t n_limit,
                                              const census::ScanOptions& opts);

}  // namespace cyclophi::io
