#include "cyclophi/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cyclophi::symmetry {

namespace {

using Coord = std::pair<double, double>;

double dist_sq(const Coord& a, const Coord& b) {
    const double dx = a.first - b.first;
    const double dy = a.second - b.second;
    return dx * dx + dy * dy;
}

// Squared distance from each source point to its nearest target point,
// by exhaustive scan.
std::vector<double> nn_sq_bruteforce(const std::vector<Coord>& source,
                                     const std::vector<Coord>& target) {
    std::vector<double> out(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const Coord& t : target) best = std::min(best, dist_sq(source[i], t));
        out[i] = best;
    }
    return out;
}

// Uniform-grid nearest neighbor over the unit square. Candidate cells are
// visited in expanding rings; a ring at Chebyshev distance ring >= 1 cannot
// hold anything closer than (ring-1)*cell, which bounds the search.
class UnitGrid {
public:
    explicit UnitGrid(const std::vector<Coord>& pts) : pts_(pts) {
        const std::size_t n = pts.size();
        g_ = static_cast<int>(std::clamp<std::size_t>(
            static_cast<std::size_t>(std::sqrt(static_cast<double>(n))), 1, 512));
        cell_ = 1.0 / g_;
        buckets_.assign(static_cast<std::size_t>(g_) * g_, {});
        for (std::size_t i = 0; i < n; ++i)
            buckets_[cell_index(pts[i])].push_back(static_cast<std::uint32_t>(i));
    }

    double nn_sq(const Coord& q) const {
        const int cx = coord_to_cell(q.first);
        const int cy = coord_to_cell(q.second);
        double best = std::numeric_limits<double>::infinity();
        for (int ring = 0; ring < 2 * g_; ++ring) {
            if (ring >= 2) {
                const double lb = (ring - 1) * cell_;
                if (best <= lb * lb) break;
            }
            bool any_cell = false;
            const int x0 = cx - ring, x1 = cx + ring;
            const int y0 = cy - ring, y1 = cy + ring;
            for (int x = x0; x <= x1; ++x) {
                if (x < 0 || x >= g_) continue;
                for (int y = y0; y <= y1; ++y) {
                    if (y < 0 || y >= g_) continue;
                    if (ring > 0 && x != x0 && x != x1 && y != y0 && y != y1) continue;
                    any_cell = true;
                    for (std::uint32_t i : buckets_[static_cast<std::size_t>(y) * g_ + x])
                        best = std::min(best, dist_sq(q, pts_[i]));
                }
            }
            if (!any_cell && ring >= g_) break;
        }
        return best;
    }

private:
    int coord_to_cell(double v) const {
        int c = static_cast<int>(v * g_);
        return std::clamp(c, 0, g_ - 1);
    }
    std::size_t cell_index(const Coord& p) const {
        return static_cast<std::size_t>(coord_to_cell(p.second)) * g_ + coord_to_cell(p.first);
    }

    const std::vector<Coord>& pts_;
    int g_ = 1;
    double cell_ = 1.0;
    std::vector<std::vector<std::uint32_t>> buckets_;
};

std::vector<double> nn_sq_grid(const std::vector<Coord>& source,
                               const std::vector<Coord>& target) {
    UnitGrid grid(target);
    std::vector<double> out(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) out[i] = grid.nn_sq(source[i]);
    return out;
}

std::vector<double> nn_sq_auto(const std::vector<Coord>& source,
                               const std::vector<Coord>& target) {
    if (source.size() * target.size() <= 1u << 18) return nn_sq_bruteforce(source, target);
    return nn_sq_grid(source, target);
}

double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
}

// Largest value after discarding the `drop` biggest ones.
double ranked_max(std::vector<double> v, std::size_t drop) {
    if (drop >= v.size()) drop = v.size() - 1;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(drop), v.end(),
                     std::greater<double>());
    return v[drop];
}

void require_nonempty(const UnitCloud& a, const UnitCloud& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff: distance to an empty cloud is undefined");
}

}  // namespace

UnitCloud::UnitCloud(std::vector<census::Point> pts, std::int64_t c_scale,
                     std::int64_t n_scale, std::string provenance)
    : points_(std::move(pts)), c_scale_(c_scale), n_scale_(n_scale),
      provenance_(std::move(provenance)) {
    if (c_scale_ <= 0 || n_scale_ <= 0)
        throw std::invalid_argument("UnitCloud: scales must be positive");
}

std::vector<Coord> UnitCloud::coords() const {
    std::vector<Coord> out;
    out.reserve(points_.size());
    const double cs = static_cast<double>(c_scale_);
    const double ns = static_cast<double>(n_scale_);
    for (const census::Point& p : points_)
        out.emplace_back(static_cast<double>(p.c) / cs, static_cast<double>(p.n) / ns);
    return out;
}

census::PointSet reflect(const census::PointSet& s) {
    std::vector<census::Point> pts;
    pts.reserve(s.size());
    for (const census::Point& p : s.points()) pts.push_back(census::Point{-p.c, p.n});
    return census::PointSet(std::move(pts));
}

Rect bounding_rect(const census::PointSet& s) {
    if (s.empty()) throw std::invalid_argument("bounding_rect: empty point set");
    Rect r;
    for (const census::Point& p : s.points()) {
        if (p.c == 0) throw std::invalid_argument("bounding_rect: point with c=0");
        r.c_k = std::max(r.c_k, p.c < 0 ? -p.c : p.c);
        r.n_k = std::max(r.n_k, p.n);
    }
    return r;
}

UnitCloud scale_to_unit(const census::PointSet& s, std::int64_t c_scale,
                        std::int64_t n_scale, std::string provenance) {
    if (c_scale <= 0 || n_scale <= 0)
        throw std::invalid_argument("scale_to_unit: scales must be positive");
    for (const census::Point& p : s.points()) {
        if (p.c < 0 || p.c > c_scale || p.n > static_cast<std::uint64_t>(n_scale))
            throw std::invalid_argument("scale_to_unit: point maps outside the unit square");
    }
    return UnitCloud(s.points(), c_scale, n_scale, std::move(provenance));
}

double hausdorff_bruteforce(const UnitCloud& a, const UnitCloud& b) {
    require_nonempty(a, b);
    const auto ca = a.coords(), cb = b.coords();
    const double d = std::max(max_of(nn_sq_bruteforce(ca, cb)), max_of(nn_sq_bruteforce(cb, ca)));
    return std::sqrt(d);
}

double hausdorff_grid(const UnitCloud& a, const UnitCloud& b) {
    require_nonempty(a, b);
    const auto ca = a.coords(), cb = b.coords();
    const double d = std::max(max_of(nn_sq_grid(ca, cb)), max_of(nn_sq_grid(cb, ca)));
    return std::sqrt(d);
}

double hausdorff(const UnitCloud& a, const UnitCloud& b) {
    require_nonempty(a, b);
    const auto ca = a.coords(), cb = b.coords();
    const double d = std::max(max_of(nn_sq_auto(ca, cb)), max_of(nn_sq_auto(cb, ca)));
    return std::sqrt(d);
}

double hausdorff_points(const std::vector<Coord>& a, const std::vector<Coord>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff: distance to an empty cloud is undefined");
    return std::sqrt(std::max(max_of(nn_sq_auto(a, b)), max_of(nn_sq_auto(b, a))));
}

SymmetryReport symmetry_report(std::uint64_t cutoff, const census::PointSet& s, double trim) {
    if (trim < 0.0 || trim >= 0.5)
        throw std::invalid_argument("symmetry_report: trim must lie in [0, 0.5)");

    SymmetryReport report;
    report.cutoff = cutoff;
    report.trim = trim;

    census::SignSplit split = split_by_sign(s);
    report.count_pos = split.positive.size();
    report.count_neg = split.negative.size();
    if (!s.empty()) report.rect = bounding_rect(s);

    if (split.positive.empty() || split.negative.empty()) {
        report.degenerate = true;
        report.hausdorff_full = std::numeric_limits<double>::quiet_NaN();
        report.hausdorff_trimmed = std::numeric_limits<double>::quiet_NaN();
        return report;
    }

    // Joint rectangle of the whole cutoff set, never per-sign rectangles.
    const auto ns = static_cast<std::int64_t>(report.rect.n_k);
    UnitCloud pos = scale_to_unit(split.positive, report.rect.c_k, ns, "positive");
    UnitCloud neg = scale_to_unit(reflect(split.negative), report.rect.c_k, ns,
                                  "negative-reflected");

    const auto cp = pos.coords(), cn = neg.coords();
    const std::vector<double> to_neg = nn_sq_auto(cp, cn);
    const std::vector<double> to_pos = nn_sq_auto(cn, cp);

    report.hausdorff_full = std::sqrt(std::max(max_of(to_neg), max_of(to_pos)));
    const std::size_t drop_pos = static_cast<std::size_t>(trim * static_cast<double>(to_neg.size()));
    const std::size_t drop_neg = static_cast<std::size_t>(trim * static_cast<double>(to_pos.size()));
    report.hausdorff_trimmed = std::sqrt(
        std::max(ranked_max(to_neg, drop_pos), ranked_max(to_pos, drop_neg)));
    return report;
}

std::vector<SymmetryReport> symmetry_series(
    const std::vector<std::pair<std::uint64_t, census::PointSet>>& points_by_cutoff,
    double trim) {
    std::uint64_t prev = 0;
    std::vector<SymmetryReport> reports;
    reports.reserve(points_by_cutoff.size());
    for (const auto& [cutoff, pts] : points_by_cutoff) {
        if (cutoff <= prev)
            throw std::invalid_argument("symmetry_series: cutoffs must be strictly ascending");
        prev = cutoff;
        reports.push_back(symmetry_report(cutoff, pts, trim));
    }
    return reports;
}

}  // namespace cyclophi::symmetry
