#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cyclophi/csv_io.hpp"
#include "cyclophi/errors.hpp"
#include "cyclophi/svg.hpp"
#include "cyclophi/symmetry.hpp"
#include "cyclophi/version.hpp"

using namespace cyclophi;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path("io_scratch") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void spit(const fs::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary);
    REQUIRE(out.good());
    out << bytes;
}

}  // namespace

TEST_CASE("fixed double rendering") {
    CHECK(io::fmt_double(0.25) == "0.25");
    CHECK(io::fmt_double(0.0) == "0");
    CHECK(io::fmt_double(1.0 / 3.0) == "0.333333333333");
    CHECK(io::fmt_double(std::nan("")) == "nan");
    CHECK(io::fmt_double(-std::nan("")) == "nan");
    CHECK(io::fmt_double(1e300 * 1e300) == "inf");
    CHECK(io::fmt_double(-1e300 * 1e300) == "-inf");
}

TEST_CASE("fnv1a64 reference vectors") {
    CHECK(io::fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(io::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(io::fnv1a64("foobar") == 0x85944171f73967e8ull);
    // Streaming in two chunks equals one pass.
    CHECK(io::fnv1a64("bar", io::fnv1a64("foo")) == io::fnv1a64("foobar"));
}

TEST_CASE("manifest round trip") {
    const fs::path dir = scratch("manifest");
    io::Manifest m;
    m.kind = "census-B";
    m.engine = std::string(kEngineVersion);
    m.highest_n = 12345;
    m.rows = 678;
    m.checksum = 0xdeadbeefcafef00dull;
    m.complete = true;
    io::write_manifest(dir / "m", m);
    CHECK(io::read_manifest(dir / "m") == m);

    m.complete = false;
    io::write_manifest(dir / "m2", m);
    CHECK(io::read_manifest(dir / "m2") == m);
}

TEST_CASE("manifest corruption is rejected") {
    const fs::path dir = scratch("manifest_bad");
    spit(dir / "bad1", "not a manifest\n");
    CHECK_THROWS_AS(io::read_manifest(dir / "bad1"), ManifestMismatchError);
    spit(dir / "bad2", "cyclophi-manifest v1\nkind: census-B\n");
    CHECK_THROWS_AS(io::read_manifest(dir / "bad2"), ManifestMismatchError);
    spit(dir / "bad3",
         "cyclophi-manifest v1\nkind: census-B\nengine: x\nhighest_n: zzz\nrows: 1\n"
         "checksum: 00\ncomplete: 1\n");
    CHECK_THROWS_AS(io::read_manifest(dir / "bad3"), ManifestMismatchError);
    CHECK_THROWS_AS(io::read_manifest(dir / "missing"), IoError);
}

TEST_CASE("census run writes rows, manifest, and strict csv") {
    const fs::path dir = scratch("census_run");
    const fs::path csv = dir / "b.csv";
    const auto result = io::run_census_to_file(csv, 300, {}, false);
    CHECK(result.highest_n == 300);
    CHECK(result.rows == 7);  // 105,165,195,210,255,273,285
    const std::string bytes = slurp(csv);
    CHECK(bytes.substr(0, 4) == "n,c\n");
    CHECK(bytes.find("105,-2\n") != std::string::npos);
    CHECK(bytes.find("165,2\n") != std::string::npos);

    const auto points = io::read_census_csv(csv);
    CHECK(points.size() == result.rows);
    CHECK(points.front() == census::Point{-2, 105});

    const io::Manifest m = io::read_manifest(io::manifest_path_for(csv));
    CHECK(m.kind == "census-B");
    CHECK(m.engine == kEngineVersion);
    CHECK(m.highest_n == 300);
    CHECK(m.rows == result.rows);
    CHECK(m.checksum == io::fnv1a64(bytes));
}

TEST_CASE("resumed census runs are byte-identical to fresh runs") {
    const fs::path dir = scratch("census_resume");
    const fs::path fresh = dir / "fresh.csv";
    const fs::path grown = dir / "grown.csv";

    io::run_census_to_file(fresh, 600, {}, false);

    io::run_census_to_file(grown, 250, {}, false);
    const auto step = io::run_census_to_file(grown, 600, {}, true);
    CHECK(step.resumed);
    CHECK_FALSE(step.already_satisfied);
    CHECK(slurp(fresh) == slurp(grown));
    CHECK(io::read_manifest(io::manifest_path_for(fresh)) ==
          io::read_manifest(io::manifest_path_for(grown)));

    // A further resume with nothing to add must not touch the file.
    const auto noop = io::run_census_to_file(grown, 500, {}, true);
    CHECK(noop.already_satisfied);
    CHECK(noop.highest_n == 600);
    CHECK(slurp(fresh) == slurp(grown));
}

TEST_CASE("resume refuses tampered data") {
    const fs::path dir = scratch("census_tamper");
    const fs::path csv = dir / "b.csv";
    io::run_census_to_file(csv, 300, {}, false);

    std::string bytes = slurp(csv);
    bytes[bytes.size() - 2] = '9';  // flip a digit in the last row
    spit(csv, bytes);
    CHECK_THROWS_AS(io::run_census_to_file(csv, 400, {}, true), ManifestMismatchError);
}

TEST_CASE("resume refuses a foreign engine version") {
    const fs::path dir = scratch("census_engine");
    const fs::path csv = dir / "b.csv";
    io::run_census_to_file(csv, 300, {}, false);
    io::Manifest m = io::read_manifest(io::manifest_path_for(csv));
    m.engine = "cyclophi-series/0.0.0-other";
    io::write_manifest(io::manifest_path_for(csv), m);
    CHECK_THROWS_AS(io::run_census_to_file(csv, 400, {}, true), ManifestMismatchError);
}

TEST_CASE("first-appearance runs persist incomplete scans honestly") {
    const fs::path dir = scratch("first_run");
    const fs::path csv = dir / "a.csv";

    const auto scan = io::run_first_to_file(csv, 2, 1000, {});
    CHECK(scan.complete);
    CHECK(slurp(csv) == "ordinal,c,n\n1,-2,105\n2,2,165\n");
    const auto records = io::read_first_csv(csv);
    REQUIRE(records.size() == 2);
    CHECK(records[1] == census::FirstAppearanceRecord{2, 2, 165});

    const auto partial = io::run_first_to_file(dir / "partial.csv", 10, 104, {});
    CHECK_FALSE(partial.complete);
    CHECK(slurp(dir / "partial.csv") == "ordinal,c,n\n");
    const io::Manifest m = io::read_manifest(io::manifest_path_for(dir / "partial.csv"));
    CHECK_FALSE(m.complete);
    CHECK(m.kind == "first-A");
    CHECK(m.highest_n == 104);
}

TEST_CASE("strict csv parsing reports line numbers") {
    const fs::path dir = scratch("csv_strict");

    spit(dir / "h.csv", "wrong,header\n");
    CHECK_THROWS_AS(io::read_census_csv(dir / "h.csv"), CsvError);

    spit(dir / "cols.csv", "n,c\n105,-2,9\n");
    CHECK_THROWS_WITH_AS(io::read_census_csv(dir / "cols.csv"),
                         doctest::Contains(":2:"), CsvError);

    spit(dir / "int.csv", "n,c\n105, -2\n");
    CHECK_THROWS_AS(io::read_census_csv(dir / "int.csv"), CsvError);

    spit(dir / "trivial.csv", "n,c\n105,1\n");
    CHECK_THROWS_AS(io::read_census_csv(dir / "trivial.csv"), CsvError);

    spit(dir / "order.csv", "n,c\n165,2\n105,-2\n");
    CHECK_THROWS_AS(io::read_census_csv(dir / "order.csv"), CsvError);

    spit(dir / "nonl.csv", "n,c\n105,-2");
    CHECK_THROWS_AS(io::read_census_csv(dir / "nonl.csv"), CsvError);

    spit(dir / "crlf.csv", "n,c\r\n105,-2\r\n");
    CHECK_THROWS_AS(io::read_census_csv(dir / "crlf.csv"), CsvError);

    spit(dir / "gap.csv", "ordinal,c,n\n1,-2,105\n3,2,165\n");
    try {
        io::read_first_csv(dir / "gap.csv");
        FAIL("expected CsvError");
    } catch (const CsvError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("csv kind detection") {
    const fs::path dir = scratch("kind");
    spit(dir / "a.csv", "ordinal,c,n\n");
    spit(dir / "b.csv", "n,c\n");
    spit(dir / "x.csv", "who,knows\n");
    CHECK(io::detect_csv_kind(dir / "a.csv") == io::CsvKind::first_a);
    CHECK(io::detect_csv_kind(dir / "b.csv") == io::CsvKind::census_b);
    CHECK_THROWS_AS(io::detect_csv_kind(dir / "x.csv"), CsvError);

    spit(dir / "a2.csv", "ordinal,c,n\n1,-2,105\n2,2,165\n");
    const census::PointSet pts = io::read_points(dir / "a2.csv", io::CsvKind::first_a);
    CHECK(pts.size() == 2);
    CHECK(pts.contains(census::Point{2, 165}));
}

TEST_CASE("symmetry csv has the documented header and nan handling") {
    const fs::path dir = scratch("sym_csv");
    symmetry::SymmetryReport ok;
    ok.cutoff = 100;
    ok.rect = {3, 400};
    ok.count_pos = 5;
    ok.count_neg = 4;
    ok.hausdorff_full = 0.25;
    ok.hausdorff_trimmed = 0.125;
    ok.trim = 0.02;
    symmetry::SymmetryReport degenerate;
    degenerate.cutoff = 10;
    degenerate.rect = {2, 105};
    degenerate.count_neg = 1;
    degenerate.hausdorff_full = std::nan("");
    degenerate.hausdorff_trimmed = std::nan("");
    degenerate.trim = 0.02;
    degenerate.degenerate = true;

    io::write_symmetry_csv(dir / "s.csv", {degenerate, ok});
    CHECK(slurp(dir / "s.csv") ==
          "k,c_k,n_k,count_pos,count_neg,hausdorff_full,hausdorff_trimmed,trim,degenerate\n"
          "10,2,105,0,1,nan,nan,0.02,1\n"
          "100,3,400,5,4,0.25,0.125,0.02,0\n");
}

TEST_CASE("coeffs csv") {
    const fs::path dir = scratch("coeffs_csv");
    io::write_coeffs_csv(dir / "c.csv", engine::CoeffVec{6, {1, -1, 1}});
    CHECK(slurp(dir / "c.csv") == "exponent,coefficient\n0,1\n1,-1\n2,1\n");
}

TEST_CASE("svg output is deterministic and self-contained") {
    std::vector<census::Point> pts{{-2, 105}, {2, 165}, {-3, 385}};
    svg::PlotOptions opts;
    opts.title = "sample";
    const std::string one = svg::render_scatter(pts, opts);
    const std::string two = svg::render_scatter(pts, opts);
    CHECK(one == two);
    CHECK(one.find("<svg") != std::string::npos);
    CHECK(one.find(">c</text>") != std::string::npos);
    CHECK(one.find(">n</text>") != std::string::npos);
    CHECK(one.find("sample") != std::string::npos);
    CHECK(one.find("<circle") != std::string::npos);

    const std::string empty = svg::render_scatter({}, {});
    CHECK(empty.find("<circle") == std::string::npos);
    CHECK(empty.find(">c</text>") != std::string::npos);

    const fs::path dir = scratch("svg");
    svg::write_scatter(dir / "p.svg", pts, opts);
    CHECK(slurp(dir / "p.svg") == one);
}

TEST_CASE("cache dir honors the environment override") {
    const fs::path dir = scratch("cache");
    const fs::path target = dir / "override";
    setenv("CYCLOPHI_CACHE_DIR", target.string().c_str(), 1);
    CHECK(io::cache_dir() == target);
    CHECK(fs::exists(target));
    unsetenv("CYCLOPHI_CACHE_DIR");
    CHECK(io::cache_dir() == fs::path(".cyclophi-cache"));
}
