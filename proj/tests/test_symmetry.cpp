#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cyclophi/census.hpp"
#include "cyclophi/symmetry.hpp"

using namespace cyclophi;
using census::Point;
using census::PointSet;
using symmetry::UnitCloud;

namespace {

UnitCloud cloud_of(std::vector<Point> pts, std::int64_t cs, std::int64_t ns) {
    return UnitCloud(std::move(pts), cs, ns, "test");
}

UnitCloud random_cloud(std::mt19937_64& rng, std::size_t size, std::int64_t span) {
    std::uniform_int_distribution<std::int64_t> coord(0, span);
    std::vector<Point> pts;
    pts.reserve(size);
    for (std::size_t i = 0; i < size; ++i)
        pts.push_back(Point{coord(rng), static_cast<std::uint64_t>(coord(rng))});
    return cloud_of(std::move(pts), span, span);
}

}  // namespace

TEST_CASE("reflection mirrors the first coordinate and is an involution") {
    const PointSet s({Point{-2, 105}, Point{2, 165}, Point{3, 400}});
    const PointSet r = symmetry::reflect(s);
    CHECK(r.contains(Point{2, 105}));
    CHECK(r.contains(Point{-2, 165}));
    CHECK(r.contains(Point{-3, 400}));
    CHECK(symmetry::reflect(r) == s);
}

TEST_CASE("bounding rectangles") {
    CHECK(symmetry::bounding_rect(PointSet({Point{-2, 105}})) == symmetry::Rect{2, 105});
    CHECK(symmetry::bounding_rect(PointSet({Point{-2, 105}, Point{2, 165}})) ==
          symmetry::Rect{2, 165});
    CHECK(symmetry::bounding_rect(PointSet({Point{-5, 10}, Point{3, 700}})) ==
          symmetry::Rect{5, 700});
    CHECK_THROWS_AS(symmetry::bounding_rect(PointSet{}), std::invalid_argument);
    CHECK_THROWS_AS(symmetry::bounding_rect(PointSet({Point{0, 7}})), std::invalid_argument);
}

TEST_CASE("scaling into the unit square is exact") {
    const UnitCloud cloud = symmetry::scale_to_unit(PointSet({Point{1, 2}}), 2, 4);
    REQUIRE(cloud.size() == 1);
    CHECK(cloud.coords()[0].first == 0.5);
    CHECK(cloud.coords()[0].second == 0.5);
    CHECK(cloud.c_scale() == 2);
    CHECK(cloud.n_scale() == 4);

    CHECK(symmetry::scale_to_unit(PointSet{}, 3, 3).empty());

    CHECK_THROWS_AS(symmetry::scale_to_unit(PointSet({Point{3, 1}}), 2, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(symmetry::scale_to_unit(PointSet({Point{-1, 1}}), 2, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(symmetry::scale_to_unit(PointSet({Point{1, 5}}), 2, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(symmetry::scale_to_unit(PointSet({Point{1, 1}}), 0, 4),
                    std::invalid_argument);
}

TEST_CASE("hausdorff distances on tiny configurations") {
    const UnitCloud a = cloud_of({Point{0, 0}, Point{1, 0}}, 1, 1);
    const UnitCloud b = cloud_of({Point{0, 0}}, 1, 1);
    const UnitCloud c = cloud_of({Point{1, 1}}, 1, 1);

    CHECK(symmetry::hausdorff(a, a) == 0.0);
    CHECK(symmetry::hausdorff(b, c) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(symmetry::hausdorff(a, b) == 1.0);
    CHECK(symmetry::hausdorff(b, a) == 1.0);

    CHECK_THROWS_AS(symmetry::hausdorff(a, cloud_of({}, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(symmetry::hausdorff(cloud_of({}, 1, 1), a), std::invalid_argument);
}

TEST_CASE("hausdorff on raw coordinate lists") {
    CHECK(symmetry::hausdorff_points({{0.0, 0.0}}, {{1.0, 1.0}}) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(symmetry::hausdorff_points({{0.25, 0.25}}, {{0.25, 0.25}}) == 0.0);
    CHECK_THROWS_AS(symmetry::hausdorff_points({}, {{0.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("metric axioms hold on random clouds") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        const UnitCloud a = random_cloud(rng, 40, 1000);
        const UnitCloud b = random_cloud(rng, 55, 1000);
        const UnitCloud c = random_cloud(rng, 25, 1000);
        const double ab = symmetry::hausdorff(a, b);
        const double ba = symmetry::hausdorff(b, a);
        const double ac = symmetry::hausdorff(a, c);
        const double cb = symmetry::hausdorff(c, b);
        CHECK(ab == ba);
        CHECK(symmetry::hausdorff(a, a) == 0.0);
        CHECK(ab >= 0.0);
        CHECK(ab <= std::sqrt(2.0) + 1e-12);
        CHECK(ab <= ac + cb + 1e-12);
    }
}

TEST_CASE("grid accelerator equals brute force bitwise") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t na = 1 + static_cast<std::size_t>(rng() % 400);
        const std::size_t nb = 1 + static_cast<std::size_t>(rng() % 400);
        const std::int64_t span = 1 + static_cast<std::int64_t>(rng() % 2000);
        const UnitCloud a = random_cloud(rng, na, span);
        const UnitCloud b = random_cloud(rng, nb, span);
        CHECK(symmetry::hausdorff_grid(a, b) == symmetry::hausdorff_bruteforce(a, b));
    }
    // Dense duplicated lattice, where bucket collisions are the common case.
    std::vector<Point> dup;
    for (int i = 0; i < 300; ++i) dup.push_back(Point{i % 3, static_cast<std::uint64_t>(i % 5)});
    const UnitCloud d = cloud_of(std::move(dup), 4, 6);
    const UnitCloud e = cloud_of({Point{4, 6}, Point{0, 0}}, 4, 6);
    CHECK(symmetry::hausdorff_grid(d, e) == symmetry::hausdorff_bruteforce(d, e));
}

TEST_CASE("trimmed distance never exceeds the full distance") {
    std::mt19937_64 rng(1357);
    std::uniform_int_distribution<std::int64_t> coord(2, 800);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point> pts;
        const std::size_t size = 6 + static_cast<std::size_t>(rng() % 120);
        for (std::size_t i = 0; i < size; ++i) {
            const std::int64_t c = coord(rng);
            pts.push_back(Point{rng() % 2 ? c : -c, static_cast<std::uint64_t>(coord(rng))});
        }
        // Duplicate a few points to force nearest-neighbor ties.
        for (std::size_t i = 0; i < 4 && i < pts.size(); ++i) pts.push_back(pts[i]);
        const census::PointSet set(std::move(pts));
        census::SignSplit split = census::split_by_sign(set);
        if (split.positive.empty() || split.negative.empty()) continue;
        for (double trim : {0.0, 0.02, 0.1, 0.3}) {
            const auto report = symmetry::symmetry_report(trial, set, trim);
            CHECK(report.hausdorff_trimmed <= report.hausdorff_full);
            if (trim == 0.0) CHECK(report.hausdorff_trimmed == report.hausdorff_full);
        }
    }
}

TEST_CASE("symmetry report on an exactly symmetric set") {
    const PointSet s({Point{2, 10}, Point{-2, 10}, Point{3, 40}, Point{-3, 40}});
    const auto report = symmetry::symmetry_report(50, s, 0.02);
    CHECK(report.cutoff == 50);
    CHECK(report.rect == symmetry::Rect{3, 40});
    CHECK(report.count_pos == 2);
    CHECK(report.count_neg == 2);
    CHECK_FALSE(report.degenerate);
    CHECK(report.hausdorff_full == 0.0);
    CHECK(report.hausdorff_trimmed == 0.0);
}

TEST_CASE("one-sided sets give degenerate reports") {
    const auto report = symmetry::symmetry_report(105, PointSet({Point{-2, 105}}), 0.02);
    CHECK(report.degenerate);
    CHECK(report.count_pos == 0);
    CHECK(report.count_neg == 1);
    CHECK(std::isnan(report.hausdorff_full));
    CHECK(std::isnan(report.hausdorff_trimmed));
    CHECK(report.rect == symmetry::Rect{2, 105});

    const auto empty_report = symmetry::symmetry_report(7, PointSet{}, 0.02);
    CHECK(empty_report.degenerate);
    CHECK(empty_report.rect == symmetry::Rect{0, 0});
}

TEST_CASE("report uses the joint rectangle, not per-sign rectangles") {
    // Negative side reaches further out in both axes; the positive cloud must
    // still be scaled by the joint maxima.
    const PointSet s({Point{2, 10}, Point{-4, 20}});
    const auto report = symmetry::symmetry_report(20, s, 0.0);
    CHECK(report.rect == symmetry::Rect{4, 20});
    // Scaled: positive (0.5, 0.5), reflected negative (1.0, 1.0).
    const double expected = std::sqrt(0.25 + 0.25);
    CHECK(report.hausdorff_full == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("series validates its inputs") {
    const PointSet s({Point{2, 10}, Point{-2, 12}});
    std::vector<std::pair<std::uint64_t, PointSet>> ok = {{10, s}, {20, s}};
    CHECK(symmetry::symmetry_series(ok, 0.02).size() == 2);

    std::vector<std::pair<std::uint64_t, PointSet>> unsorted = {{20, s}, {10, s}};
    CHECK_THROWS_AS(symmetry::symmetry_series(unsorted, 0.02), std::invalid_argument);
    CHECK_THROWS_AS(symmetry::symmetry_series(ok, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(symmetry::symmetry_series(ok, -0.1), std::invalid_argument);
}
