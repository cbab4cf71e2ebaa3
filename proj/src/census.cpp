#include "cyclophi/census.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "cyclophi/coeff_engine.hpp"
#include "cyclophi/errors.hpp"
#include "cyclophi/numthy.hpp"

namespace cyclophi::census {

PointSet::PointSet(std::vector<Point> pts) : points_(std::move(pts)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

RadicalValueSets radical_value_sets(std::uint64_t m) {
    if (m == 0 || m % 2 == 0)
        throw std::invalid_argument("radical_value_sets: m must be odd");
    RadicalValueSets out;
    if (m == 1) return out;  // indexes 1 and 2 have no nontrivial values

    engine::HalfSeries hs = engine::phi_lower_half(m);
    // The degree is even, so exponent parity is mirror-invariant and the
    // lower half (through the midpoint) sees every value of both the odd
    // index and its doubled twist.
    const std::size_t half = static_cast<std::size_t>(hs.degree / 2);
    for (std::size_t j = 0; j <= half; ++j) {
        const std::int64_t c = hs.lower[j];
        if (c >= -1 && c <= 1) continue;
        out.odd_index.push_back(c);
        out.doubled_index.push_back(j % 2 == 0 ? c : -c);
    }
    auto dedupe = [](std::vector<std::int64_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(out.odd_index);
    dedupe(out.doubled_index);
    return out;
}

namespace {

// Product of the distinct odd primes of n.
std::uint64_t odd_radical(std::uint64_t n) {
    numthy::Factorization f = numthy::factorize(n);
    std::uint64_t r = 1;
    for (const auto& pp : f.factors)
        if (pp.prime != 2) r *= pp.prime;
    return r;
}

unsigned clamp_workers(unsigned w) {
    if (w == 0) w = 1;
    return std::min(w, 64u);
}

// Expands every radical in `needed` (sorted odd squarefree values) into its
// value-set pair. Work is split in contiguous index blocks; each worker
// writes only its own slots, so output is independent of scheduling.
std::vector<RadicalValueSets> expand_radicals(const std::vector<std::uint64_t>& needed,
                                              unsigned workers) {
    std::vector<RadicalValueSets> sets(needed.size());
    workers = clamp_workers(workers);
    if (workers <= 1 || needed.size() < 2) {
        for (std::size_t i = 0; i < needed.size(); ++i) sets[i] = radical_value_sets(needed[i]);
        return sets;
    }

    std::vector<std::thread> threads;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::size_t chunk = (needed.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = static_cast<std::size_t>(w) * chunk;
        if (lo >= needed.size()) break;
        const std::size_t hi = std::min(needed.size(), lo + chunk);
        threads.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) sets[i] = radical_value_sets(needed[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return sets;
}

}  // namespace

std::vector<CensusRow> scan_census_range(std::uint64_t lo, std::uint64_t hi,
                                         const ScanOptions& opts) {
    if (lo == 0) throw std::invalid_argument("scan_census_range: lo must be positive");
    if (hi < lo) throw std::invalid_argument("scan_census_range: empty range");

    // Pass 1: the odd radical of every index in range.
    const std::size_t span = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::uint64_t> rad_of(span);
    std::vector<bool> is_needed(static_cast<std::size_t>(hi) + 1, false);
    for (std::uint64_t n = lo; n <= hi; ++n) {
        std::uint64_t m;
        try {
            m = odd_radical(n);
        } catch (const OverflowError& e) {
            throw OverflowError("census scan failed at n=" + std::to_string(n) + ": " + e.what());
        }
        rad_of[static_cast<std::size_t>(n - lo)] = m;
        is_needed[static_cast<std::size_t>(m)] = true;
    }
    std::vector<std::uint64_t> needed;
    for (std::uint64_t m = 1; m <= hi; ++m)
        if (is_needed[static_cast<std::size_t>(m)]) needed.push_back(m);

    // Pass 2: expand each needed radical once, in parallel.
    std::vector<RadicalValueSets> sets;
    try {
        sets = expand_radicals(needed, opts.workers);
    } catch (const OverflowError& e) {
        throw OverflowError(std::string("census scan: ") + e.what());
    }

    // Pass 3: serial assembly in index order.
    std::vector<CensusRow> rows;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        const std::uint64_t m = rad_of[static_cast<std::size_t>(n - lo)];
        const std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(needed.begin(), needed.end(), m) - needed.begin());
        const std::vector<std::int64_t>& values =
            n % 2 == 0 ? sets[idx].doubled_index : sets[idx].odd_index;
        if (!values.empty()) rows.push_back(CensusRow{n, values});
    }
    return rows;
}

std::vector<CensusRow> scan_census(std::uint64_t n_limit, const ScanOptions& opts) {
    return scan_census_range(1, n_limit, opts);
}

FirstAppearanceScan scan_first_appearances(std::uint64_t count, std::uint64_t n_limit,
                                           const ScanOptions& opts) {
    if (count == 0) throw std::invalid_argument("scan_first_appearances: count must be positive");
    if (n_limit == 0) throw std::invalid_argument("scan_first_appearances: n_limit must be positive");

    FirstAppearanceScan scan;
    std::unordered_set<std::int64_t> seen;

    constexpr std::uint64_t kBlock = 1 << 13;
    for (std::uint64_t lo = 1; lo <= n_limit; lo += kBlock) {
        const std::uint64_t hi = std::min(n_limit, lo + kBlock - 1);
        for (const CensusRow& row : scan_census_range(lo, hi, opts)) {
            for (std::int64_t c : row.values) {
                if (seen.insert(c).second) {
                    scan.records.push_back(
                        FirstAppearanceRecord{scan.records.size() + 1, c, row.n});
                    if (scan.records.size() == count) {
                        scan.complete = true;
                        scan.scanned_to = row.n;
                        return scan;
                    }
                }
            }
        }
    }
    scan.complete = false;
    scan.scanned_to = n_limit;
    return scan;
}

PointSet points_of(const std::vector<CensusRow>& rows) {
    std::vector<Point> pts;
    for (const auto& row : rows)
        for (std::int64_t c : row.values) pts.push_back(Point{c, row.n});
    return PointSet(std::move(pts));
}

PointSet points_of(const std::vector<FirstAppearanceRecord>& records) {
    std::vector<Point> pts;
    pts.reserve(records.size());
    for (const auto& rec : records) pts.push_back(Point{rec.c, rec.n});
    return PointSet(std::move(pts));
}

SignSplit split_by_sign(const PointSet& s) {
    std::vector<Point> pos, neg;
    for (const Point& p : s.points()) {
        if (p.c >= -1 && p.c <= 1)
            throw std::invalid_argument("split_by_sign: point with trivial value c=" +
                                        std::to_string(p.c));
        (p.c > 0 ? pos : neg).push_back(p);
    }
    return SignSplit{PointSet(std::move(pos)), PointSet(std::move(neg))};
}

}  // namespace cyclophi::census
