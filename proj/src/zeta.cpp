#include "primerecip/zeta.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "primerecip/errors.hpp"
#include "primerecip/modarith.hpp"
#include "primerecip/primes.hpp"

namespace primerecip {

namespace {

constexpr std::uint64_t kNumbersPerChunk = std::uint64_t{1} << 22;

void check_exponent(double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::domain_error("exponent s must be a finite positive real");
}

double power_term(std::uint64_t n, double s) {
    const auto x = static_cast<double>(n);
    return s == 1.0 ? 1.0 / x : std::pow(x, -s);
}

double log_of_sum(double value) {
    return value > 0.0 ? std::log(value) : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::string_view to_string(CutoffKind kind) {
    return kind == CutoffKind::TermCount ? "terms" : "prime_bound";
}

ZetaPartial zeta_partial_sum(double s, std::uint64_t terms) {
    check_exponent(s);
    if (terms == 0) throw std::domain_error("term count must be at least 1");
    double sum = 0.0;
    for (std::uint64_t n = terms; n >= 1; --n) sum += power_term(n, s);
    return ZetaPartial{s, CutoffKind::TermCount, terms, sum, log_of_sum(sum)};
}

ZetaPartial euler_product_inverse(double s, std::uint64_t prime_bound, const ExecOptions& opts) {
    check_exponent(s);
    if (prime_bound < 2) throw std::domain_error("prime bound must be at least 2");
    const PrimeRange whole{2, prime_bound};

    const std::uint64_t span = prime_bound - 1;
    const std::size_t n_chunks = (span + kNumbersPerChunk - 1) / kNumbersPerChunk;
    // Fixed chunk boundaries and an index-order fold keep the result
    // bit-identical for any worker count.
    auto parts = run_chunks<double>(n_chunks, opts, [&](std::size_t i) {
        const std::uint64_t lo = whole.lo() + i * kNumbersPerChunk;
        const std::uint64_t hi = std::min(prime_bound, lo + kNumbersPerChunk - 1);
        double acc = 0.0;
        for_each_prime_segment(PrimeRange{lo, hi}, [&](std::span<const std::uint64_t> seg) {
            for (std::uint64_t p : seg) acc += std::log1p(-power_term(p, s));
        });
        return acc;
    });
    double log_value = 0.0;
    for (double part : parts) log_value += part;
    return ZetaPartial{s, CutoffKind::PrimeBound, prime_bound, std::exp(log_value), log_value};
}

double log_euler_partial(double s, std::uint64_t prime_bound, const ExecOptions& opts) {
    return euler_product_inverse(s, prime_bound, opts).log_value;
}

MobiusTable mobius_sieve(std::uint64_t limit) {
    if (limit == 0) throw std::domain_error("mobius_sieve: limit must be at least 1");
    if (limit > kMobiusCeiling) throw capacity_error("mobius_sieve: limit above 10^9");

    MobiusTable table;
    table.limit = limit;
    table.values.assign(limit + 1, 0);
    table.values[1] = 1;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> primes;

    // Each composite m is struck exactly once, as i * p with p its smallest
    // prime factor.
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            table.values[i] = -1;
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t m = i * p;
            if (m > limit) break;
            composite[m] = true;
            if (i % p == 0) {
                table.values[m] = 0;
                break;
            }
            table.values[m] = static_cast<std::int8_t>(-table.values[i]);
        }
    }
    return table;
}

int mobius_value(std::uint64_t n) {
    if (n == 0) throw std::domain_error("mobius_value: n must be positive");
    const auto f = factorize(n);
    if (!f.square_free()) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

ZetaPartial mobius_partial_sum(double s, std::uint64_t terms) {
    check_exponent(s);
    if (terms == 0) throw std::domain_error("term count must be at least 1");
    const auto mu = mobius_sieve(terms);
    double sum = 0.0;
    for (std::uint64_t n = terms; n >= 1; --n) {
        if (mu[n] != 0) sum += mu[n] * power_term(n, s);
    }
    return ZetaPartial{s, CutoffKind::TermCount, terms, sum, log_of_sum(sum)};
}

}  // namespace primerecip
