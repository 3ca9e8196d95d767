#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "primerecip/modarith.hpp"
#include "primerecip/primes.hpp"

using namespace primerecip;

namespace {

void check_factorization(std::uint64_t n, const Factorization& f) {
    CHECK(f.n == n);
    CHECK(f.multiply_back() == n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        CHECK(is_prime(f.factors[i].prime));
        CHECK(f.factors[i].exponent >= 1);
        if (i > 0) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
    }
}

}  // namespace

TEST_CASE("mul_mod examples") {
    CHECK(mul_mod(0, 5, 7) == 0);
    CHECK(mul_mod(6, 6, 7) == 1);
    const std::uint64_t m61 = (std::uint64_t{1} << 61) - 1;
    CHECK(mul_mod(std::uint64_t{1} << 40, std::uint64_t{1} << 40, m61) == 524288);
    CHECK(oracle::mul_mod(std::uint64_t{1} << 40, std::uint64_t{1} << 40, m61) == 524288);
    CHECK_THROWS_AS(mul_mod(1, 1, 0), std::domain_error);
}

TEST_CASE("pow_mod examples") {
    CHECK(pow_mod(2, 3, 7) == 1);
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(10, 6, 7) == 1);
    CHECK(pow_mod(5, 0, 1) == 0);
    CHECK(pow_mod(5, 0, 13) == 1);
    CHECK_THROWS_AS(pow_mod(2, 2, 0), std::domain_error);
}

TEST_CASE("mul_mod and pow_mod agree with big-integer arithmetic") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t m = 1 + rng() % ((std::uint64_t{1} << 63) - 1);
        const std::uint64_t a = rng() % m, b = rng() % m, e = rng();
        CHECK(mul_mod(a, b, m) == oracle::mul_mod(a, b, m));
        if (i % 10 == 0) CHECK(pow_mod(a, e, m) == oracle::pow_mod(a, e, m));
    }
}

TEST_CASE("factorize examples") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(60).factors == std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});
    const auto f = factorize(999982);
    check_factorization(999982, f);
    CHECK(f.factors == std::vector<PrimePower>{{2, 1}, {79, 1}, {6329, 1}});
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize needs the randomized path for large semiprimes") {
    const std::uint64_t p = 1'000'000'007, q = 1'000'000'009;
    const auto f = factorize(p * q);
    CHECK(f.factors == std::vector<PrimePower>{{p, 1}, {q, 1}});
    const auto sq = factorize(p * p);
    CHECK(sq.factors == std::vector<PrimePower>{{p, 2}});
    // Result is independent of the seed.
    CHECK(factorize(p * q, 1).factors == f.factors);
    CHECK(factorize(p * q, 12345).factors == f.factors);
}

TEST_CASE("factorize random 64-bit values") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t n = 1 + (rng() >> 1);
        check_factorization(n, factorize(n));
    }
    for (std::uint64_t n = 1; n < 5000; ++n) check_factorization(n, factorize(n));
}

TEST_CASE("multiplicative_order examples") {
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 11) == 10);
    CHECK(multiplicative_order(2, 17) == 8);
    CHECK(multiplicative_order(1, 13) == 1);
    CHECK(multiplicative_order(10, 3) == 1);  // base reduced mod p
    CHECK_THROWS_AS(multiplicative_order(0, 7), std::domain_error);
    CHECK_THROWS_AS(multiplicative_order(14, 7), std::domain_error);
    CHECK_THROWS_AS(multiplicative_order(2, 15), std::domain_error);
}

TEST_CASE("is_max_length examples") {
    CHECK(is_max_length(2, 11));
    CHECK_FALSE(is_max_length(2, 7));
    CHECK_FALSE(is_max_length(2, 970279));
}

TEST_CASE("order matches repeated multiplication for p < 2000") {
    for (std::uint64_t p : sieve_upto(2000)) {
        for (std::uint64_t b = 1; b < p; ++b) {
            const auto t = multiplicative_order(b, p);
            REQUIRE(t == oracle::order(b, p));
        }
    }
}

TEST_CASE("order divides p - 1 and is minimal") {
    std::mt19937_64 rng(5);
    const auto primes = primes_in_range(PrimeRange{1'000'000, 1'100'000});
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t p = primes[rng() % primes.size()];
        const std::uint64_t b = 1 + rng() % (p - 1);
        const auto t = multiplicative_order(b, p);
        CHECK((p - 1) % t == 0);
        CHECK(pow_mod(b, t, p) == 1);
        for (const auto& f : factorize(t).factors) CHECK(pow_mod(b, t / f.prime, p) != 1);
    }
}
