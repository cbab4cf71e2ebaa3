#include "cyclophi/newton_sigma.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclophi/errors.hpp"
#include "cyclophi/numthy.hpp"

namespace cyclophi::newton {

namespace {

std::vector<std::uint64_t> odd_squarefree_primes(std::uint64_t n, const char* who) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": n must be odd and > 1");
    numthy::Factorization f = numthy::factorize(n);
    if (!f.squarefree())
        throw std::invalid_argument(std::string(who) + ": n must be squarefree");
    std::vector<std::uint64_t> primes;
    primes.reserve(f.factors.size());
    for (const auto& pp : f.factors) primes.push_back(pp.prime);
    return primes;
}

void check_prime_list(const std::vector<std::uint64_t>& primes, const char* who) {
    if (primes.empty()) throw std::invalid_argument(std::string(who) + ": empty prime list");
    std::uint64_t prev = 0;
    for (std::uint64_t p : primes) {
        if (p < 3 || p % 2 == 0 || !numthy::is_prime(p))
            throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) +
                                        " is not an odd prime");
        if (p <= prev)
            throw std::invalid_argument(std::string(who) + ": primes must be strictly ascending");
        prev = p;
    }
}

}  // namespace

PowerSumTable PowerSumTable::build(const std::vector<std::uint64_t>& primes,
                                   std::size_t count) {
    check_prime_list(primes, "PowerSumTable::build");
    PowerSumTable table;
    table.n = 1;
    for (std::uint64_t p : primes) table.n = checked_mul_u64(table.n, p);

    const bool t_odd = primes.size() % 2 == 1;
    table.values.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
        // gcd(n, k) is the product of the listed primes dividing k; the power
        // sum is (-1)^t * totient(g) * mobius(g).
        std::int64_t tot = 1;
        unsigned omega = 0;
        for (std::uint64_t p : primes) {
            if (k % p == 0) {
                tot = checked_mul(tot, static_cast<std::int64_t>(p - 1));
                ++omega;
            }
        }
        std::int64_t s = tot;
        if (omega % 2 == 1) s = -s;
        if (t_odd) s = -s;
        table.values.push_back(s);
    }
    return table;
}

std::int64_t power_sum(std::uint64_t n, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("power_sum: k must be positive");
    auto primes = odd_squarefree_primes(n, "power_sum");
    std::int64_t tot = 1;
    unsigned omega = 0;
    for (std::uint64_t p : primes) {
        if (k % p == 0) {
            tot = checked_mul(tot, static_cast<std::int64_t>(p - 1));
            ++omega;
        }
    }
    std::int64_t s = tot;
    if (omega % 2 == 1) s = -s;
    if (primes.size() % 2 == 1) s = -s;
    return s;
}

std::int64_t power_sum_general(std::uint64_t n, std::uint64_t k) {
    if (n == 0) throw std::invalid_argument("power_sum_general: n must be positive");
    if (k == 0) throw std::invalid_argument("power_sum_general: k must be positive");
    const std::uint64_t g = std::gcd(k, n);
    const std::uint64_t cofactor = n / g;
    const std::uint64_t phi_n = numthy::totient(n);
    const std::uint64_t phi_cof = numthy::totient(cofactor);
    if (phi_n % phi_cof != 0)
        throw std::logic_error("power_sum_general: quotient of totients is not integral");
    std::int64_t s = static_cast<std::int64_t>(phi_n / phi_cof);
    return s * mobius(numthy::factorize(cofactor));
}

SigmaPrefix sigma_prefix_from_primes(const std::vector<std::uint64_t>& primes,
                                     std::size_t count) {
    PowerSumTable table = PowerSumTable::build(primes, count);

    SigmaPrefix out;
    out.n = table.n;
    out.sigma.assign(count + 1, 0);
    out.sigma[0] = 1;
    // k*sigma_k = -(sigma_{k-1} S_1 + ... + sigma_1 S_{k-1} + S_k). The
    // window is tiny, so the full convolution per k is recomputed each step.
    for (std::size_t k = 1; k <= count; ++k) {
        std::int64_t acc = 0;
        for (std::size_t i = 1; i <= k; ++i)
            acc = checked_add(acc, checked_mul(out.sigma[k - i], table.at(i)));
        const std::int64_t rhs = checked_sub(0, acc);
        if (rhs % static_cast<std::int64_t>(k) != 0)
            throw std::logic_error("Newton recursion produced a non-integer sigma at k=" +
                                   std::to_string(k));
        out.sigma[k] = rhs / static_cast<std::int64_t>(k);
    }
    return out;
}

SigmaPrefix sigma_prefix(std::uint64_t n, std::size_t count) {
    auto primes = odd_squarefree_primes(n, "sigma_prefix");
    std::uint64_t phi = 1;
    for (std::uint64_t p : primes) phi = checked_mul_u64(phi, p - 1);
    if (count > phi)
        throw std::invalid_argument("sigma_prefix: count exceeds the polynomial degree");
    return sigma_prefix_from_primes(primes, count);
}

std::int64_t sigma_closed_form(std::uint64_t n, std::uint64_t k) {
    auto prof = numthy::odd_squarefree_profile(n);
    if (!prof || prof->t % 2 == 0 || prof->t < 3)
        throw std::invalid_argument(
            "sigma_closed_form: n must be odd squarefree with an odd number >= 3 of primes");
    const auto& p = prof->primes;
    const std::uint64_t window = p[0] + p[1];
    if (k == 0 || k >= window)
        throw std::invalid_argument("sigma_closed_form: k must satisfy 1 <= k < p1+p2");

    if (k < p[0]) return 1;
    if (k < p[1]) return 0;
    // Largest i with p_i <= k; the ladder steps down by one at each prime and
    // stays flat past p_r.
    int i = 2;
    while (i < prof->r && k >= p[static_cast<std::size_t>(i)]) ++i;
    return -(i - 1);
}

TheoremMainReport verify_theorem_main(const std::vector<std::uint64_t>& primes) {
    check_prime_list(primes, "verify_theorem_main");
    if (primes.size() < 3 || primes.size() % 2 == 0)
        throw std::invalid_argument(
            "verify_theorem_main: need an odd number (>= 3) of ascending odd primes");

    TheoremMainReport report;
    report.primes = primes;
    report.t = static_cast<int>(primes.size());
    report.n = 1;
    report.degree = 1;
    for (std::uint64_t p : primes) {
        report.n = checked_mul_u64(report.n, p);
        report.degree = checked_mul_u64(report.degree, p - 1);
    }

    const std::uint64_t window = primes[0] + primes[1];
    report.r = 0;
    while (report.r < report.t && primes[static_cast<std::size_t>(report.r)] < window)
        ++report.r;
    report.extra_minus = 1 + primes[static_cast<std::size_t>(report.r - 1)] < window;

    for (std::int64_t v = -(report.r - 2); v <= report.r - 1; ++v)
        report.guaranteed.push_back(v);

    // Coefficient of the index-2n polynomial at x^(degree - k) is
    // (-1)^k sigma_k, because the degree is even and doubling the index
    // negates odd-degree coefficients.
    const std::size_t count = static_cast<std::size_t>(window) - 1;
    SigmaPrefix sp = sigma_prefix_from_primes(primes, count);
    for (std::size_t k = 0; k <= count; ++k) {
        std::int64_t v = k % 2 == 0 ? sp.sigma[k] : -sp.sigma[k];
        report.witness.emplace(v, report.degree - k);  // keeps the smallest k
    }

    report.verified = true;
    for (std::int64_t v : report.guaranteed)
        if (!report.witness.count(v)) report.verified = false;
    if (report.extra_minus && !report.witness.count(1 - report.r)) report.verified = false;
    return report;
}

}  // namespace cyclophi::newton
