#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace cyclophi::census {

// All distinct nontrivial coefficient values (|c| >= 2) of one index n,
// ascending. Indexes with no such values produce no row.
struct CensusRow {
    std::uint64_t n = 0;
    std::vector<std::int64_t> values;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// One entry of the first-appearance enumeration: value c occurs in index n
// and in no smaller index; ordinals follow (n ascending, then c ascending).
struct FirstAppearanceRecord {
    std::uint64_t ordinal = 0;
    std::int64_t c = 0;
    std::uint64_t n = 0;

    friend bool operator==(const FirstAppearanceRecord&, const FirstAppearanceRecord&) = default;
};

// Incomplete scans are first-class: complete says whether the requested count
// was reached before the index limit.
struct FirstAppearanceScan {
    std::vector<FirstAppearanceRecord> records;
    bool complete = false;
    std::uint64_t scanned_to = 0;
};

struct Point {
    std::int64_t c = 0;
    std::uint64_t n = 0;

    friend auto operator<=>(const Point& a, const Point& b) {
        if (auto cmp = a.n <=> b.n; cmp != 0) return cmp;
        return a.c <=> b.c;
    }
    friend bool operator==(const Point&, const Point&) = default;
};

// Finite set of lattice points (c, n); stored sorted by (n, c), deduplicated.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts);

    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const Point& p) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
};

struct ScanOptions {
    unsigned workers = 1;
};

// Census rows for lo <= n <= hi. Only odd squarefree radicals are expanded;
// every other index resolves by the radical-inflation and index-doubling
// value-set identities. Deterministic for any worker count.
std::vector<CensusRow> scan_census_range(std::uint64_t lo, std::uint64_t hi,
                                         const ScanOptions& opts = {});

std::vector<CensusRow> scan_census(std::uint64_t n_limit, const ScanOptions& opts = {});

// The first `count` first-appearance records, scanning indexes up to n_limit.
FirstAppearanceScan scan_first_appearances(std::uint64_t count, std::uint64_t n_limit,
                                           const ScanOptions& opts = {});

PointSet points_of(const std::vector<CensusRow>& rows);
PointSet points_of(const std::vector<FirstAppearanceRecord>& records);

struct SignSplit {
    PointSet positive;
    PointSet negative;
};

// Partition by the sign of c. Points with |c| <= 1 violate nontriviality and
// are rejected.
SignSplit split_by_sign(const PointSet& s);

// Nontrivial value sets of the odd index m (squarefree) and of index 2m,
// derived from one half-series expansion. Exposed for tests.
struct RadicalValueSets {
    std::vector<std::int64_t> odd_index;
    std::vector<std::int64_t> doubled_index;
};
RadicalValueSets radical_value_sets(std::uint64_t m);

}  // namespace cyclophi::census
