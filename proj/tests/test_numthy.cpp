#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <numeric>

#include "cyclophi/numthy.hpp"

using namespace cyclophi::numthy;

TEST_CASE("factorize canonical forms") {
    CHECK(factorize(1).factors.empty());

    auto f2 = factorize(2);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0] == PrimePower{2, 1});

    auto f360 = factorize(360);
    REQUIRE(f360.factors.size() == 3);
    CHECK(f360.factors[0] == PrimePower{2, 3});
    CHECK(f360.factors[1] == PrimePower{3, 2});
    CHECK(f360.factors[2] == PrimePower{5, 1});

    auto fp = factorize(1000003);  // prime just above the sieve's fast range? no: prime anyway
    REQUIRE(fp.factors.size() == 1);
    CHECK(fp.factors[0] == PrimePower{1000003, 1});

    // Above the sieve bound (2^20): trial division must still resolve it.
    auto fbig = factorize(std::uint64_t{1048583});  // smallest prime above 2^20
    REQUIRE(fbig.factors.size() == 1);
    CHECK(fbig.factors[0] == PrimePower{1048583, 1});

    auto fpow = factorize(std::uint64_t{1} << 62);
    REQUIRE(fpow.factors.size() == 1);
    CHECK(fpow.factors[0] == PrimePower{2, 62});

    auto fsemiprime = factorize(std::uint64_t{1048583} * 1048589);
    REQUIRE(fsemiprime.factors.size() == 2);
    CHECK(fsemiprime.factors[0] == PrimePower{1048583, 1});
    CHECK(fsemiprime.factors[1] == PrimePower{1048589, 1});

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs n for a sweep") {
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        auto f = factorize(n);
        std::uint64_t prod = 1, prev = 0;
        for (const auto& pp : f.factors) {
            CHECK(pp.prime > prev);
            CHECK(pp.exponent >= 1);
            prev = pp.prime;
            for (int e = 0; e < pp.exponent; ++e) prod *= pp.prime;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("mobius known values") {
    // n = 1..20
    const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0, -1, 0, -1, 0};
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(mobius(n) == expected[n - 1]);
    CHECK(mobius(105) == -1);
    CHECK(mobius(210) == 1);
    CHECK(mobius(211) == -1);
    CHECK(mobius(49) == 0);
}

TEST_CASE("mobius divisor sums vanish for n > 1") {
    for (std::uint64_t n = 1; n <= 300; ++n) {
        long long s = 0;
        for (std::uint64_t d : divisors(n)) s += mobius(d);
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("totient known values and properties") {
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(105) == 48);
    CHECK(totient(210) == 48);
    CHECK(totient(4096) == 2048);
    CHECK(totient(9699690) == 1658880);

    // Totient by direct gcd count, as an independent oracle.
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t a = 1; a <= n; ++a)
            if (std::gcd(a, n) == 1) ++count;
        CHECK(totient(n) == count);
    }
}

TEST_CASE("divisors are sorted and complete") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(60) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60});
    CHECK(divisors(840).size() == 32);
    for (std::uint64_t n = 1; n <= 500; ++n) {
        auto divs = divisors(n);
        std::uint64_t prev = 0, brute = 0;
        for (std::uint64_t d : divs) {
            CHECK(d > prev);
            CHECK(n % d == 0);
            prev = d;
        }
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) ++brute;
        CHECK(divs.size() == brute);
    }
}

TEST_CASE("radical and squarefree") {
    CHECK(radical(1) == 1);
    CHECK(radical(360) == 30);
    CHECK(radical(1024) == 2);
    CHECK(radical(105) == 105);
    CHECK(factorize(105).squarefree());
    CHECK_FALSE(factorize(45).squarefree());
}

TEST_CASE("is_prime spot checks") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime(2999));
    CHECK_FALSE(is_prime(2997));
    CHECK(is_prime(1048583));
    CHECK_FALSE(is_prime(std::uint64_t{1048583} * 1048589));
}

TEST_CASE("shared sieve basics") {
    const SpfSieve& sieve = shared_sieve();
    CHECK(sieve.bound() == (1u << 20));
    CHECK(sieve.spf(12) == 2);
    CHECK(sieve.spf(49) == 7);
    CHECK(sieve.spf(1048576) == 2);
    REQUIRE(sieve.primes().size() >= 5);
    CHECK(sieve.primes()[0] == 2);
    CHECK(sieve.primes()[1] == 3);
    CHECK(sieve.primes()[2] == 5);
    CHECK(sieve.primes()[3] == 7);
    CHECK(sieve.primes().size() == 82025);  // primes below 2^20
}

TEST_CASE("odd squarefree profile") {
    auto p105 = odd_squarefree_profile(105);
    REQUIRE(p105.has_value());
    CHECK(p105->primes == std::vector<std::uint64_t>{3, 5, 7});
    CHECK(p105->t == 3);
    CHECK(p105->r == 3);

    auto p15 = odd_squarefree_profile(15);
    REQUIRE(p15.has_value());
    CHECK(p15->t == 2);
    CHECK(p15->r == 2);

    auto p15015 = odd_squarefree_profile(15015);  // 3*5*7*11*13
    REQUIRE(p15015.has_value());
    CHECK(p15015->t == 5);
    CHECK(p15015->r == 3);  // 3, 5, 7 lie below 3+5

    auto p231 = odd_squarefree_profile(231);  // 3*7*11
    REQUIRE(p231.has_value());
    CHECK(p231->r == 2);  // only 3 and 7 lie below 10

    CHECK_FALSE(odd_squarefree_profile(9).has_value());    // not squarefree
    CHECK_FALSE(odd_squarefree_profile(3).has_value());    // single prime
    CHECK_FALSE(odd_squarefree_profile(30).has_value());   // even
    CHECK_FALSE(odd_squarefree_profile(45045).has_value()); // 3^2 * 5 * 7 * 11 * 13
    CHECK_FALSE(odd_squarefree_profile(1).has_value());
}
