#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cyclophi::numthy {

struct PrimePower {
    std::uint64_t prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly increasing, exponents >= 1,
// empty factor list exactly for n = 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    bool squarefree() const;
    std::uint64_t radical() const;
};

// Smallest-prime-factor sieve (linear). Built once, read-only afterwards;
// concurrent readers are fine.
class SpfSieve {
public:
    explicit SpfSieve(std::uint32_t bound);

    std::uint32_t bound() const { return bound_; }

    // n must be in [2, bound].
    std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }

    const std::vector<std::uint32_t>& primes() const { return primes_; }

private:
    std::uint32_t bound_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

// Process-wide sieve shared by everything below. Lazily constructed on first
// use (thread-safe); sized so that census-scale inputs resolve by lookup and
// anything up to 2^40 by in-sieve trial division.
const SpfSieve& shared_sieve();

Factorization factorize(std::uint64_t n);

int mobius(std::uint64_t n);
int mobius(const Factorization& f);

std::uint64_t totient(std::uint64_t n);
std::uint64_t totient(const Factorization& f);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

std::uint64_t radical(std::uint64_t n);

bool is_prime(std::uint64_t n);

// For odd squarefree n with at least two prime factors: its sorted primes,
// their count t, and the count r of primes below p1 + p2.
struct OddSquarefreeProfile {
    std::vector<std::uint64_t> primes;
    int t = 0;
    int r = 0;

    friend bool operator==(const OddSquarefreeProfile&, const OddSquarefreeProfile&) = default;
};

std::optional<OddSquarefreeProfile> odd_squarefree_profile(std::uint64_t n);

}  // namespace cyclophi::numthy
