#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace cyclophi::engine {

// Dense exact coefficient vector of one cyclotomic polynomial.
// coeffs[j] is the coefficient of x^j; the vector has totient(n)+1 entries.
// Immutable after construction; safe to share across threads.
struct CoeffVec {
    std::uint64_t n = 0;
    std::vector<std::int64_t> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
    std::int64_t at(std::size_t j) const { return j < coeffs.size() ? coeffs[j] : 0; }
    std::int64_t eval_at_one() const;
    std::int64_t max_abs_coefficient() const;

    friend bool operator==(const CoeffVec&, const CoeffVec&) = default;
};

// The lower half of the coefficient vector, as produced by the truncated
// series engine: lower[j] for 0 <= j <= degree/2 + 1. The upper half follows
// by the palindrome mirror. Census scans work on this directly and never
// materialize the full vector.
struct HalfSeries {
    std::uint64_t n = 0;
    std::uint64_t degree = 0;
    std::vector<std::int64_t> lower;
};

// Truncated-power-series engine: expands the product of (1 - x^{n/s}) to the
// power mu(s) over squarefree s dividing n, to half length, then mirrors.
HalfSeries phi_lower_half(std::uint64_t n);  // n >= 2
CoeffVec phi_poly_series(std::uint64_t n);

// Inductive long-division engine: divides x^n - 1 by every lower-index
// cyclotomic factor, literally. Algorithmically independent of the series
// engine; used as the cross-checking oracle.
CoeffVec phi_poly_division(std::uint64_t n);

// Index-doubling twist for odd n > 1: negates odd-degree coefficients,
// producing the coefficient vector of index 2n.
CoeffVec phi_poly_negate_odd(const CoeffVec& v);

// Sorted distinct coefficient values occurring in v.
std::vector<std::int64_t> coefficient_value_set(const CoeffVec& v);

// The memoized engine behind phi_poly_division. Cache is LRU-bounded and
// mutex-guarded. Tests instantiate small capacities to exercise eviction.
class DivisionEngine {
public:
    explicit DivisionEngine(std::size_t cache_capacity = 4096);
    ~DivisionEngine();

    DivisionEngine(const DivisionEngine&) = delete;
    DivisionEngine& operator=(const DivisionEngine&) = delete;

    CoeffVec compute(std::uint64_t n);
    std::size_t cache_size() const;

private:
    std::shared_ptr<const CoeffVec> compute_ptr(std::uint64_t n);

    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace cyclophi::engine
