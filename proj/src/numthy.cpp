#include "cyclophi/numthy.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclophi/errors.hpp"

namespace cyclophi::numthy {

bool Factorization::squarefree() const {
    for (const auto& pp : factors)
        if (pp.exponent > 1) return false;
    return true;
}

std::uint64_t Factorization::radical() const {
    std::uint64_t r = 1;
    for (const auto& pp : factors) r *= pp.prime;
    return r;
}

SpfSieve::SpfSieve(std::uint32_t bound) : bound_(bound), spf_(bound + 1, 0) {
    for (std::uint32_t i = 2; i <= bound; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = i;
            primes_.push_back(i);
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[i]) break;
            std::uint64_t ip = std::uint64_t(i) * p;
            if (ip > bound) break;
            spf_[ip] = p;
        }
    }
}

const SpfSieve& shared_sieve() {
    static const SpfSieve sieve(1u << 20);
    return sieve;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization out;
    out.n = n;
    if (n == 1) return out;

    const SpfSieve& sieve = shared_sieve();

    auto push = [&out](std::uint64_t p, int e) { out.factors.push_back({p, e}); };

    // Strip primes found by trial division over the sieved prime list.
    if (n > sieve.bound()) {
        for (std::uint32_t p : sieve.primes()) {
            if (std::uint64_t(p) * p > n) break;
            if (n % p == 0) {
                int e = 0;
                while (n % p == 0) { n /= p; ++e; }
                push(p, e);
            }
            if (n <= sieve.bound()) break;
        }
        // Beyond the sieve: odd candidates. Slow for adversarial inputs, but
        // the toolkit's inputs are census-sized or products of listed primes.
        if (n > sieve.bound()) {
            std::uint64_t c = std::uint64_t(sieve.bound()) + 1;
            if (c % 2 == 0) ++c;
            while (c * c <= n) {
                if (n % c == 0) {
                    int e = 0;
                    while (n % c == 0) { n /= c; ++e; }
                    push(c, e);
                }
                c += 2;
            }
            if (n > 1) {
                push(n, 1);
                n = 1;
            }
        }
    }

    while (n > 1) {
        std::uint64_t p = sieve.spf(static_cast<std::uint32_t>(n));
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        push(p, e);
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

int mobius(const Factorization& f) {
    if (!f.squarefree()) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

int mobius(std::uint64_t n) { return mobius(factorize(n)); }

std::uint64_t totient(const Factorization& f) {
    std::uint64_t phi = 1;
    for (const auto& pp : f.factors) {
        phi = checked_mul_u64(phi, pp.prime - 1);
        for (int i = 1; i < pp.exponent; ++i) phi = checked_mul_u64(phi, pp.prime);
    }
    return phi;
}

std::uint64_t totient(std::uint64_t n) { return totient(factorize(n)); }

std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& pp : f.factors) {
        std::size_t base = divs.size();
        std::uint64_t q = 1;
        for (int e = 1; e <= pp.exponent; ++e) {
            q *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }

std::uint64_t radical(std::uint64_t n) { return factorize(n).radical(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    Factorization f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

std::optional<OddSquarefreeProfile> odd_squarefree_profile(std::uint64_t n) {
    if (n == 0 || n % 2 == 0) return std::nullopt;
    Factorization f = factorize(n);
    if (!f.squarefree() || f.factors.size() < 2) return std::nullopt;

    OddSquarefreeProfile prof;
    for (const auto& pp : f.factors) prof.primes.push_back(pp.prime);
    prof.t = static_cast<int>(prof.primes.size());
    std::uint64_t threshold = prof.primes[0] + prof.primes[1];
    prof.r = static_cast<int>(
        std::count_if(prof.primes.begin(), prof.primes.end(),
                      [threshold](std::uint64_t p) { return p < threshold; }));
    return prof;
}

}  // namespace cyclophi::numthy
