#include "primerecip/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "primerecip/primes.hpp"

namespace primerecip {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTrialLimit = 1'000'000;

const std::vector<std::uint64_t>& trial_primes() {
    static const std::vector<std::uint64_t> table = sieve_upto(kTrialLimit);
    return table;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

// One non-trivial divisor of the odd composite n (Brent's cycle detection
// with batched gcds). Retries with fresh parameters from the same stream.
std::uint64_t brent_split(std::uint64_t n, std::uint64_t& rng) {
    constexpr std::uint64_t kBatch = 128;
    for (;;) {
        const std::uint64_t c = splitmix64(rng) % (n - 1) + 1;
        std::uint64_t y = splitmix64(rng) % n;
        auto f = [&](std::uint64_t v) {
            return static_cast<std::uint64_t>((static_cast<u128>(mul_mod(v, v, n)) + c) % n);
        };

        std::uint64_t g = 1, q = 1, x = 0, ys = 0;
        for (std::uint64_t r = 1; g == 1; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const std::uint64_t lim = std::min(kBatch, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mul_mod(q, abs_diff(x, y), n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(abs_diff(x, ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(std::uint64_t n, std::uint64_t seed, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t rng = seed ^ (n * 0xD6E8FEB86659FD93ULL);
    std::uint64_t d = brent_split(n, rng);
    split_into(d, seed, out);
    split_into(n / d, seed, out);
}

}  // namespace

std::uint64_t Factorization::multiply_back() const {
    std::uint64_t m = 1;
    for (const auto& f : factors)
        for (unsigned e = 0; e < f.exponent; ++e) m *= f.prime;
    return m;
}

bool Factorization::square_free() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (m == 0) throw std::domain_error("mul_mod: modulus must be positive");
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    if (m == 0) throw std::domain_error("pow_mod: modulus must be positive");
    std::uint64_t result = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return result;
}

Factorization factorize(std::uint64_t n, std::uint64_t seed) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    Factorization result;
    result.n = n;

    std::uint64_t rest = n;
    for (std::uint64_t q : trial_primes()) {
        if (q * q > rest) break;
        if (rest % q != 0) continue;
        unsigned e = 0;
        while (rest % q == 0) {
            rest /= q;
            ++e;
        }
        result.factors.push_back({q, e});
    }
    if (rest == 1) return result;

    std::vector<std::uint64_t> big;
    const bool trial_exhausted = rest >= kTrialLimit * kTrialLimit;
    if (trial_exhausted)
        split_into(rest, seed, big);
    else
        big.push_back(rest);  // no divisor <= sqrt(rest) was found
    std::sort(big.begin(), big.end());
    for (std::uint64_t q : big) {
        if (!result.factors.empty() && result.factors.back().prime == q)
            ++result.factors.back().exponent;
        else
            result.factors.push_back({q, 1});
    }
    return result;
}

std::uint64_t multiplicative_order(std::uint64_t b, std::uint64_t p, std::uint64_t seed) {
    if (!is_prime(p)) throw std::domain_error("multiplicative_order: modulus is not prime");
    b %= p;
    if (b == 0) throw std::domain_error("multiplicative_order: base is divisible by the modulus");

    std::uint64_t order = p - 1;
    for (const auto& f : factorize(p - 1, seed).factors) {
        for (unsigned e = 0; e < f.exponent; ++e) {
            if (pow_mod(b, order / f.prime, p) != 1) break;
            order /= f.prime;
        }
    }
    return order;
}

bool is_max_length(std::uint64_t b, std::uint64_t p, std::uint64_t seed) {
    return multiplicative_order(b, p, seed) == p - 1;
}

}  // namespace primerecip
