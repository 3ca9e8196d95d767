#pragma once

#include <cstdint>
#include <vector>

namespace primerecip {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x9E3779B97F4A7C15ULL;

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;  // primes strictly ascending

    std::uint64_t multiply_back() const;
    bool square_free() const;
};

/// (a * b) mod m through a 128-bit intermediate. Throws std::domain_error on m == 0.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// b^e mod m by square-and-multiply; pow_mod(b, 0, m) == 1 % m.
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

/// Complete factorization. Trial division by primes up to 10^6, then
/// Brent's variant of Pollard rho on any composite cofactor. The random
/// stream depends only on (seed, cofactor), so results are reproducible.
Factorization factorize(std::uint64_t n, std::uint64_t seed = kDefaultFactorSeed);

/// Least t >= 1 with b^t == 1 (mod p), found by factoring p - 1 and stripping
/// prime factors from the exponent. b is reduced mod p first.
/// Throws std::domain_error if p is not prime or p divides b.
std::uint64_t multiplicative_order(std::uint64_t b, std::uint64_t p,
                                   std::uint64_t seed = kDefaultFactorSeed);

/// True iff b is a primitive root mod p (the order of b is p - 1).
bool is_max_length(std::uint64_t b, std::uint64_t p, std::uint64_t seed = kDefaultFactorSeed);

}  // namespace primerecip
