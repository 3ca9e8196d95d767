#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace primerecip {

inline constexpr std::uint64_t kRangeCeiling = std::uint64_t{1} << 40;
inline constexpr std::uint64_t kPlainSieveCeiling = std::uint64_t{1} << 32;
inline constexpr std::size_t kDefaultSegmentOdds = std::size_t{1} << 20;

/// Inclusive interval [lo, hi] of naturals with hi < 2^40.
class PrimeRange {
public:
    /// Throws std::invalid_argument if lo > hi, capacity_error if hi >= 2^40.
    PrimeRange(std::uint64_t lo, std::uint64_t hi);

    std::uint64_t lo() const noexcept { return lo_; }
    std::uint64_t hi() const noexcept { return hi_; }

    friend bool operator==(const PrimeRange&, const PrimeRange&) = default;

private:
    std::uint64_t lo_;
    std::uint64_t hi_;
};

/// All primes <= limit, ascending. limit may not exceed 2^32.
std::vector<std::uint64_t> sieve_upto(std::uint64_t limit);

/// All primes in the range, ascending. Segmented; memory is bounded by the
/// segment size plus the output.
std::vector<std::uint64_t> primes_in_range(const PrimeRange& range,
                                           std::size_t segment_odds = kDefaultSegmentOdds);

/// Streams the primes of the range in ascending order, one segment at a time.
/// The callback receives each segment's primes as a span.
void for_each_prime_segment(const PrimeRange& range,
                            const std::function<void(std::span<const std::uint64_t>)>& visit,
                            std::size_t segment_odds = kDefaultSegmentOdds);

std::uint64_t count_primes(const PrimeRange& range,
                           std::size_t segment_odds = kDefaultSegmentOdds);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

}  // namespace primerecip
