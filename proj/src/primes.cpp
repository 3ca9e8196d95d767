#include "primerecip/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "primerecip/errors.hpp"
#include "primerecip/modarith.hpp"

namespace primerecip {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Odd primes <= limit by a plain byte sieve over odd numbers. limit is small
// (at most 2^20 for any valid range).
std::vector<std::uint64_t> odd_base_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 3) return out;
    std::size_t n_odds = (limit - 1) / 2;  // 3, 5, ..., limit
    std::vector<char> composite(n_odds + 1, 0);
    for (std::size_t i = 1; i <= n_odds; ++i) {
        if (composite[i]) continue;
        std::uint64_t q = 2 * i + 1;
        out.push_back(q);
        for (std::uint64_t j = (q * q - 1) / 2; j <= n_odds; j += q) composite[j] = 1;
    }
    return out;
}

}  // namespace

PrimeRange::PrimeRange(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {
    if (lo > hi)
        throw std::invalid_argument("prime range: lo (" + std::to_string(lo) +
                                    ") exceeds hi (" + std::to_string(hi) + ")");
    if (hi >= kRangeCeiling)
        throw capacity_error("prime range: hi must be below 2^40");
}

void for_each_prime_segment(const PrimeRange& range,
                            const std::function<void(std::span<const std::uint64_t>)>& visit,
                            std::size_t segment_odds) {
    if (segment_odds == 0) throw std::invalid_argument("segment size must be positive");
    const std::uint64_t lo = range.lo();
    const std::uint64_t hi = range.hi();
    std::vector<std::uint64_t> found;

    if (lo <= 2 && hi >= 2) found.push_back(2);
    if (hi < 3) {
        if (!found.empty()) visit(found);
        return;
    }

    const std::uint64_t first_odd = std::max<std::uint64_t>(3, lo | 1);
    if (first_odd > hi) {
        if (!found.empty()) visit(found);
        return;
    }
    const auto base = odd_base_primes(isqrt(hi));
    std::vector<char> sieve(segment_odds);

    for (std::uint64_t seg_lo = first_odd; seg_lo <= hi;) {
        const std::uint64_t span_odds =
            std::min<std::uint64_t>(segment_odds, (hi - seg_lo) / 2 + 1);
        const std::uint64_t seg_hi = seg_lo + 2 * (span_odds - 1);
        std::fill(sieve.begin(), sieve.begin() + static_cast<std::ptrdiff_t>(span_odds), 1);

        for (std::uint64_t q : base) {
            if (q * q > seg_hi) break;
            std::uint64_t m = std::max(q * q, (seg_lo + q - 1) / q * q);
            if ((m & 1) == 0) m += q;
            for (std::uint64_t j = (m - seg_lo) / 2; j < span_odds; j += q) sieve[j] = 0;
        }
        for (std::uint64_t j = 0; j < span_odds; ++j)
            if (sieve[j]) found.push_back(seg_lo + 2 * j);

        if (!found.empty()) visit(found);
        found.clear();
        if (seg_hi >= hi) break;
        seg_lo = seg_hi + 2;
    }
}

std::vector<std::uint64_t> primes_in_range(const PrimeRange& range, std::size_t segment_odds) {
    std::vector<std::uint64_t> out;
    for_each_prime_segment(
        range, [&](std::span<const std::uint64_t> seg) { out.insert(out.end(), seg.begin(), seg.end()); },
        segment_odds);
    return out;
}

std::uint64_t count_primes(const PrimeRange& range, std::size_t segment_odds) {
    std::uint64_t n = 0;
    for_each_prime_segment(range, [&](std::span<const std::uint64_t> seg) { n += seg.size(); },
                           segment_odds);
    return n;
}

std::vector<std::uint64_t> sieve_upto(std::uint64_t limit) {
    if (limit > kPlainSieveCeiling)
        throw capacity_error("sieve_upto: limit above 2^32; use primes_in_range");
    if (limit < 2) return {};
    return primes_in_range(PrimeRange{0, limit});
}

bool is_prime(std::uint64_t n) {
    static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (std::uint64_t q : kWitnesses) {
        if (n % q == 0) return n == q;
    }
    if (n < 41 * 41) return true;

    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve witnesses are exact for all n < 3.3 * 10^24.
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace primerecip
