#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace cyclophi::newton {

// Power sums of the primitive n-th roots of unity over a fixed odd squarefree
// n, evaluated by closed form; the roots themselves are never materialized.
// values[k-1] holds the k-th power sum.
struct PowerSumTable {
    std::uint64_t n = 1;
    std::vector<std::int64_t> values;

    // primes: the distinct odd primes of n, ascending.
    static PowerSumTable build(const std::vector<std::uint64_t>& primes, std::size_t count);

    std::int64_t at(std::size_t k) const { return values[k - 1]; }
};

// k-th power sum for odd squarefree n > 1, by the multiplicative closed form.
std::int64_t power_sum(std::uint64_t n, std::uint64_t k);

// k-th power sum for arbitrary n >= 1, by the quotient formula
// totient(n)/totient(n/g) * mobius(n/g) with g = gcd(k, n).
std::int64_t power_sum_general(std::uint64_t n, std::uint64_t k);

// Leading coefficients of the cyclotomic polynomial of index n, computed by
// the Newton-identity recursion: sigma[k] is the coefficient at
// x^(totient(n)-k), with sigma[0] = 1.
struct SigmaPrefix {
    std::uint64_t n = 0;
    std::vector<std::int64_t> sigma;
};

SigmaPrefix sigma_prefix(std::uint64_t n, std::size_t count);

// Same recursion, driven directly by the prime list of an odd squarefree n.
SigmaPrefix sigma_prefix_from_primes(const std::vector<std::uint64_t>& primes,
                                     std::size_t count);

// Piecewise value of sigma_k for odd squarefree n with an odd number t >= 3
// of prime factors, valid for 1 <= k < p1 + p2:
//   1 on [1, p1), 0 on [p1, p2), -(i-1) on [p_i, p_{i+1}) for 2 <= i <= r-1,
//   and -(r-1) on [p_r, p1+p2).
std::int64_t sigma_closed_form(std::uint64_t n, std::uint64_t k);

// Outcome of checking that every integer in [-(r-2), r-1] (and 1-r when
// 1 + p_r < p1 + p2) occurs as a coefficient of the cyclotomic polynomial of
// index 2n. Only the sigma prefix is examined; the full polynomial is never
// built, so huge degrees stay cheap.
struct TheoremMainReport {
    std::vector<std::uint64_t> primes;
    std::uint64_t n = 0;       // product of the primes
    std::uint64_t degree = 0;  // totient(n) = degree of the index-2n polynomial
    int t = 0;
    int r = 0;
    std::vector<std::int64_t> guaranteed;  // -(r-2) .. r-1 ascending
    bool extra_minus = false;              // whether 1-r is also guaranteed
    bool verified = false;
    std::map<std::int64_t, std::uint64_t> witness;  // value -> exponent in index 2n
};

TheoremMainReport verify_theorem_main(const std::vector<std::uint64_t>& primes);

}  // namespace cyclophi::newton
