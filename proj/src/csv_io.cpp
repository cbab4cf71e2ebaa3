#include "cyclophi/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "cyclophi/errors.hpp"
#include "cyclophi/version.hpp"

namespace cyclophi::io {

namespace fs = std::filesystem;

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state) {
    for (unsigned char b : bytes) {
        state ^= b;
        state *= 1099511628211ull;
    }
    return state;
}

namespace {

std::string read_file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path.string());
    return std::move(ss).str();
}

void write_file_bytes(const fs::path& path, std::string_view bytes,
                      std::ios::openmode extra = {}) {
    std::ofstream out(path, std::ios::binary | extra);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("write failure on " + path.string());
}

// One logical CSV line (without its newline); keeps the 1-based line number
// for diagnostics.
struct Line {
    std::string_view text;
    std::size_t number;
};

std::vector<Line> split_lines(const fs::path& path, std::string_view bytes) {
    std::vector<Line> lines;
    std::size_t start = 0, number = 1;
    while (start < bytes.size()) {
        std::size_t nl = bytes.find('\n', start);
        if (nl == std::string_view::npos)
            throw CsvError(path.string(), number, "missing final newline");
        std::string_view text = bytes.substr(start, nl - start);
        if (text.find('\r') != std::string_view::npos)
            throw CsvError(path.string(), number, "carriage return in line");
        lines.push_back({text, number});
        start = nl + 1;
        ++number;
    }
    return lines;
}

template <typename Int>
Int parse_int(const fs::path& path, const Line& line, std::string_view field,
              const char* what) {
    Int value{};
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty())
        throw CsvError(path.string(), line.number,
                       std::string("malformed ") + what + " field '" + std::string(field) + "'");
    return value;
}

std::vector<std::string_view> split_fields(std::string_view text) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(text.substr(start));
            return fields;
        }
        fields.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
}

void require_header(const fs::path& path, const std::vector<Line>& lines,
                    std::string_view header) {
    if (lines.empty()) throw CsvError(path.string(), 1, "empty file, expected header");
    if (lines.front().text != header)
        throw CsvError(path.string(), 1,
                       "bad header '" + std::string(lines.front().text) + "', expected '" +
                           std::string(header) + "'");
}

std::string render_census_rows(std::uint64_t lo, std::uint64_t hi,
                               const census::ScanOptions& opts) {
    std::string out;
    for (const census::CensusRow& row : census::scan_census_range(lo, hi, opts)) {
        for (std::int64_t c : row.values) {
            out += std::to_string(row.n);
            out += ',';
            out += std::to_string(c);
            out += '\n';
        }
    }
    return out;
}

std::uint64_t count_data_rows(std::string_view bytes) {
    std::uint64_t newlines = 0;
    for (char ch : bytes)
        if (ch == '\n') ++newlines;
    return newlines == 0 ? 0 : newlines - 1;  // header line excluded
}

}  // namespace

fs::path manifest_path_for(const fs::path& csv_path) {
    fs::path p = csv_path;
    p += ".manifest";
    return p;
}

Manifest read_manifest(const fs::path& path) {
    const std::string bytes = read_file_bytes(path);
    std::istringstream in(bytes);
    std::string line;
    if (!std::getline(in, line) || line != "cyclophi-manifest v1")
        throw ManifestMismatchError("unrecognized manifest format in " + path.string());

    Manifest m;
    bool saw_kind = false, saw_engine = false, saw_highest = false, saw_rows = false,
         saw_checksum = false, saw_complete = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t colon = line.find(": ");
        if (colon == std::string::npos)
            throw ManifestMismatchError("malformed manifest line '" + line + "' in " +
                                        path.string());
        const std::string key = line.substr(0, colon);
        const std::string value = line.substr(colon + 2);
        auto parse_u64 = [&](int base) {
            std::uint64_t v{};
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v, base);
            if (ec != std::errc() || ptr != value.data() + value.size())
                throw ManifestMismatchError("malformed manifest value for '" + key + "' in " +
                                            path.string());
            return v;
        };
        if (key == "kind") {
            m.kind = value;
            saw_kind = true;
        } else if (key == "engine") {
            m.engine = value;
            saw_engine = true;
        } else if (key == "highest_n") {
            m.highest_n = parse_u64(10);
            saw_highest = true;
        } else if (key == "rows") {
            m.rows = parse_u64(10);
            saw_rows = true;
        } else if (key == "checksum") {
            m.checksum = parse_u64(16);
            saw_checksum = true;
        } else if (key == "complete") {
            const std::uint64_t v = parse_u64(10);
            if (v > 1)
                throw ManifestMismatchError("malformed manifest value for 'complete' in " +
                                            path.string());
            m.complete = v == 1;
            saw_complete = true;
        } else {
            throw ManifestMismatchError("unknown manifest key '" + key + "' in " + path.string());
        }
    }
    if (!(saw_kind && saw_engine && saw_highest && saw_rows && saw_checksum && saw_complete))
        throw ManifestMismatchError("manifest " + path.string() + " is missing required keys");
    return m;
}

void write_manifest(const fs::path& path, const Manifest& m) {
    char checksum[32];
    std::snprintf(checksum, sizeof checksum, "%016llx",
                  static_cast<unsigned long long>(m.checksum));
    std::string out = "cyclophi-manifest v1\n";
    out += "kind: " + m.kind + "\n";
    out += "engine: " + m.engine + "\n";
    out += "highest_n: " + std::to_string(m.highest_n) + "\n";
    out += "rows: " + std::to_string(m.rows) + "\n";
    out += "checksum: " + std::string(checksum) + "\n";
    out += "complete: " + std::string(m.complete ? "1" : "0") + "\n";
    write_file_bytes(path, out);
}

fs::path cache_dir() {
    const char* env = std::getenv("CYCLOPHI_CACHE_DIR");
    fs::path dir = env && *env ? fs::path(env) : fs::path(".cyclophi-cache");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create cache directory " + dir.string());
    return dir;
}

void write_coeffs_csv(const fs::path& path, const engine::CoeffVec& cv) {
    std::string out(kCoeffsHeader);
    out += '\n';
    for (std::size_t j = 0; j < cv.coeffs.size(); ++j) {
        out += std::to_string(j);
        out += ',';
        out += std::to_string(cv.coeffs[j]);
        out += '\n';
    }
    write_file_bytes(path, out);
}

void write_symmetry_csv(const fs::path& path,
                        const std::vector<symmetry::SymmetryReport>& reports) {
    std::string out(kSymmetryHeader);
    out += '\n';
    for (const symmetry::SymmetryReport& r : reports) {
        out += std::to_string(r.cutoff);
        out += ',';
        out += std::to_string(r.rect.c_k);
        out += ',';
        out += std::to_string(r.rect.n_k);
        out += ',';
        out += std::to_string(r.count_pos);
        out += ',';
        out += std::to_string(r.count_neg);
        out += ',';
        out += fmt_double(r.hausdorff_full);
        out += ',';
        out += fmt_double(r.hausdorff_trimmed);
        out += ',';
        out += fmt_double(r.trim);
        out += ',';
        out += r.degenerate ? '1' : '0';
        out += '\n';
    }
    write_file_bytes(path, out);
}

std::vector<census::FirstAppearanceRecord> read_first_csv(const fs::path& path) {
    const std::string bytes = read_file_bytes(path);
    const std::vector<Line> lines = split_lines(path, bytes);
    require_header(path, lines, kFirstHeader);

    std::vector<census::FirstAppearanceRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto fields = split_fields(line.text);
        if (fields.size() != 3)
            throw CsvError(path.string(), line.number, "expected 3 fields");
        census::FirstAppearanceRecord rec;
        rec.ordinal = parse_int<std::uint64_t>(path, line, fields[0], "ordinal");
        rec.c = parse_int<std::int64_t>(path, line, fields[1], "c");
        rec.n = parse_int<std::uint64_t>(path, line, fields[2], "n");
        if (rec.ordinal != records.size() + 1)
            throw CsvError(path.string(), line.number,
                           "ordinal " + std::to_string(rec.ordinal) + " out of sequence");
        if (rec.c >= -1 && rec.c <= 1)
            throw CsvError(path.string(), line.number, "trivial coefficient value");
        if (rec.n == 0) throw CsvError(path.string(), line.number, "index must be positive");
        if (!records.empty()) {
            const census::FirstAppearanceRecord& prev = records.back();
            if (rec.n < prev.n || (rec.n == prev.n && rec.c <= prev.c))
                throw CsvError(path.string(), line.number, "rows not in enumeration order");
        }
        records.push_back(rec);
    }
    return records;
}

std::vector<census::Point> read_census_csv(const fs::path& path) {
    const std::string bytes = read_file_bytes(path);
    const std::vector<Line> lines = split_lines(path, bytes);
    require_header(path, lines, kCensusHeader);

    std::vector<census::Point> points;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto fields = split_fields(line.text);
        if (fields.size() != 2)
            throw CsvError(path.string(), line.number, "expected 2 fields");
        census::Point p;
        p.n = parse_int<std::uint64_t>(path, line, fields[0], "n");
        p.c = parse_int<std::int64_t>(path, line, fields[1], "c");
        if (p.c >= -1 && p.c <= 1)
            throw CsvError(path.string(), line.number, "trivial coefficient value");
        if (p.n == 0) throw CsvError(path.string(), line.number, "index must be positive");
        if (!points.empty()) {
            const census::Point& prev = points.back();
            if (p.n < prev.n || (p.n == prev.n && p.c <= prev.c))
                throw CsvError(path.string(), line.number, "rows not sorted by (n, c)");
        }
        points.push_back(p);
    }
    return points;
}

CsvKind detect_csv_kind(const fs::path& path) {
    const std::string bytes = read_file_bytes(path);
    const std::size_t nl = bytes.find('\n');
    const std::string_view header =
        std::string_view(bytes).substr(0, nl == std::string::npos ? bytes.size() : nl);
    if (header == kFirstHeader) return CsvKind::first_a;
    if (header == kCensusHeader) return CsvKind::census_b;
    throw CsvError(path.string(), 1, "unrecognized header '" + std::string(header) + "'");
}

census::PointSet read_points(const fs::path& path, CsvKind kind) {
    if (kind == CsvKind::first_a) return census::points_of(read_first_csv(path));
    return census::PointSet(read_census_csv(path));
}

CensusRunResult run_census_to_file(const fs::path& path, std::uint64_t n_limit,
                                   const census::ScanOptions& opts, bool resume) {
    const fs::path mpath = manifest_path_for(path);
    CensusRunResult result;

    if (resume && fs::exists(path) && fs::exists(mpath)) {
        const Manifest prev = read_manifest(mpath);
        if (prev.kind != "census-B")
            throw ManifestMismatchError("manifest kind '" + prev.kind + "' is not census-B");
        if (prev.engine != kEngineVersion)
            throw ManifestMismatchError("manifest engine '" + prev.engine +
                                        "' does not match current engine " +
                                        std::string(kEngineVersion));
        const std::string existing = read_file_bytes(path);
        const std::uint64_t existing_sum = fnv1a64(existing);
        if (existing_sum != prev.checksum)
            throw ManifestMismatchError("checksum mismatch for " + path.string() +
                                        "; data was modified since the manifest was written");
        if (count_data_rows(existing) != prev.rows)
            throw ManifestMismatchError("row count mismatch for " + path.string());

        if (prev.highest_n >= n_limit) {
            result.highest_n = prev.highest_n;
            result.rows = prev.rows;
            result.resumed = true;
            result.already_satisfied = true;
            return result;
        }

        const std::string fresh = render_census_rows(prev.highest_n + 1, n_limit, opts);
        write_file_bytes(path, fresh, std::ios::app);
        Manifest m = prev;
        m.highest_n = n_limit;
        m.rows = prev.rows;
        for (char ch : fresh)
            if (ch == '\n') ++m.rows;
        m.checksum = fnv1a64(fresh, existing_sum);
        write_manifest(mpath, m);
        result.highest_n = m.highest_n;
        result.rows = m.rows;
        result.resumed = true;
        return result;
    }

    std::string out(kCensusHeader);
    out += '\n';
    out += render_census_rows(1, n_limit, opts);
    write_file_bytes(path, out);

    Manifest m;
    m.kind = "census-B";
    m.engine = kEngineVersion;
    m.highest_n = n_limit;
    m.rows = count_data_rows(out);
    m.checksum = fnv1a64(out);
    m.complete = true;
    write_manifest(mpath, m);

    result.highest_n = m.highest_n;
    result.rows = m.rows;
    return result;
}

census::FirstAppearanceScan run_first_to_file(const fs::path& path, std::uint64_t count,
                                              std::uint64_t n_limit,
                                              const census::ScanOptions& opts) {
    census::FirstAppearanceScan scan = census::scan_first_appearances(count, n_limit, opts);

    std::string out(kFirstHeader);
    out += '\n';
    for (const census::FirstAppearanceRecord& rec : scan.records) {
        out += std::to_string(rec.ordinal);
        out += ',';
        out += std::to_string(rec.c);
        out += ',';
        out += std::to_string(rec.n);
        out += '\n';
    }
    write_file_bytes(path, out);

    Manifest m;
    m.kind = "first-A";
    m.engine = kEngineVersion;
    m.highest_n = scan.scanned_to;
    m.rows = scan.records.size();
    m.checksum = fnv1a64(out);
    m.complete = scan.complete;
    write_manifest(manifest_path_for(path), m);
    return scan;
}

}  // namespace cyclophi::io
