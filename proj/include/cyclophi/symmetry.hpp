#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclophi/census.hpp"

namespace cyclophi::symmetry {

// A point set scaled into the unit square. Coordinates stay exact: the
// integer points and the two scale divisors are stored as-is, and doubles
// are produced only when a distance is computed.
class UnitCloud {
public:
    UnitCloud() = default;
    UnitCloud(std::vector<census::Point> pts, std::int64_t c_scale, std::int64_t n_scale,
              std::string provenance);

    const std::vector<census::Point>& raw_points() const { return points_; }
    std::int64_t c_scale() const { return c_scale_; }
    std::int64_t n_scale() const { return n_scale_; }
    const std::string& provenance() const { return provenance_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    // (c/c_scale, n/n_scale) for each point, rounded to double.
    std::vector<std::pair<double, double>> coords() const;

private:
    std::vector<census::Point> points_;
    std::int64_t c_scale_ = 1;
    std::int64_t n_scale_ = 1;
    std::string provenance_;
};

// Mirror across the vertical axis: (c, n) -> (-c, n).
census::PointSet reflect(const census::PointSet& s);

// Smallest [-c_k, c_k] x [0, n_k] containing a nonempty set with all c != 0.
struct Rect {
    std::int64_t c_k = 0;
    std::uint64_t n_k = 0;

    friend bool operator==(const Rect&, const Rect&) = default;
};
Rect bounding_rect(const census::PointSet& s);

// Divide coordinates by (c_scale, n_scale); every image must land in the
// unit square or the call is rejected.
UnitCloud scale_to_unit(const census::PointSet& s, std::int64_t c_scale,
                        std::int64_t n_scale, std::string provenance = {});

// Hausdorff distance between two nonempty clouds under the Euclidean metric.
// hausdorff() picks the grid accelerator for large inputs; the brute-force
// form is the reference the accelerator must agree with.
double hausdorff(const UnitCloud& a, const UnitCloud& b);
double hausdorff_bruteforce(const UnitCloud& a, const UnitCloud& b);
double hausdorff_grid(const UnitCloud& a, const UnitCloud& b);

// Same metric on raw coordinate lists (used by the Python surface and tests).
double hausdorff_points(const std::vector<std::pair<double, double>>& a,
                        const std::vector<std::pair<double, double>>& b);

// Per-cutoff symmetry diagnostic: positive cloud vs reflected negative cloud,
// both scaled by the joint bounding rectangle. hausdorff_trimmed is the
// ranked variant: each directed distance ignores the floor(trim * count)
// worst-matched source points, so it never exceeds hausdorff_full.
struct SymmetryReport {
    std::uint64_t cutoff = 0;
    Rect rect;
    std::size_t count_pos = 0;
    std::size_t count_neg = 0;
    double hausdorff_full = 0.0;
    double hausdorff_trimmed = 0.0;
    double trim = 0.0;
    bool degenerate = false;
};

SymmetryReport symmetry_report(std::uint64_t cutoff, const census::PointSet& s, double trim);

// Reports for ascending cutoffs; a cutoff with an empty sign class yields a
// degenerate-flagged report instead of failing the series.
std::vector<SymmetryReport> symmetry_series(
    const std::vector<std::pair<std::uint64_t, census::PointSet>>& points_by_cutoff,
    double trim);

}  // namespace cyclophi::symmetry
