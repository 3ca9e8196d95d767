#pragma once

#include <cstdint>
#include <vector>

#include "primerecip/dseq.hpp"
#include "primerecip/parallel.hpp"
#include "primerecip/primes.hpp"

namespace primerecip {

inline constexpr std::size_t kDefaultPrimesPerChunk = 256;

struct CensusOptions {
    ExecOptions exec;
    std::size_t primes_per_chunk = kDefaultPrimesPerChunk;
    std::uint64_t seed = kDefaultFactorSeed;
};

/// Base-2 balance classification of the reciprocals of every prime in a range.
struct RangeCensus {
    PrimeRange range{0, 0};
    std::uint64_t base = 2;
    std::uint64_t prime_count = 0;
    std::uint64_t zeros_exceed = 0;
    std::uint64_t ones_exceed = 0;
    std::uint64_t equal = 0;
    std::uint64_t max_length_count = 0;
    std::uint64_t excluded = 0;

    /// Component-wise sum; the ranges must be adjacent (other starts at hi + 1).
    RangeCensus& merge(const RangeCensus& other);

    friend bool operator==(const RangeCensus&, const RangeCensus&) = default;
};

struct DigitTotals {
    PrimeRange range{0, 0};
    std::uint64_t base = 2;
    DigitRule rule = DigitRule::Expansion;
    std::vector<std::uint64_t> totals;  // size == base
    std::uint64_t excluded = 0;
    std::uint64_t period_sum = 0;
};

struct NonMaxRun {
    std::uint64_t start_prime = 0;
    std::uint64_t end_prime = 0;
    std::uint64_t length = 0;
    // Run contains the first or last prime of the searched range, so it may
    // extend beyond it.
    bool boundary_truncated = false;

    friend bool operator==(const NonMaxRun&, const NonMaxRun&) = default;
};

RangeCensus imbalance_census(const PrimeRange& range, const CensusOptions& opts = {});

DigitTotals digit_totals(const PrimeRange& range, std::uint64_t base,
                         DigitRule rule = DigitRule::Expansion, const CensusOptions& opts = {});

/// Maximal runs of consecutive primes in the range whose reciprocals are not
/// maximum length in `base`, keeping those of length >= min_length. Primes
/// dividing the base break runs.
std::vector<NonMaxRun> find_nonmax_runs(const PrimeRange& range, std::uint64_t base,
                                        std::uint64_t min_length,
                                        const CensusOptions& opts = {});

}  // namespace primerecip
