#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "primerecip/parallel.hpp"

namespace primerecip {

inline constexpr unsigned kMaxBitWidth = 32;

enum class BitMode { Constant, Variable };

/// Zero/one digit counts over the binary forms of every prime p <= 2^width - 1.
struct BitCensusRow {
    unsigned width = 0;
    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;
    std::uint64_t total = 0;
    std::uint64_t prime_count = 0;

    friend bool operator==(const BitCensusRow&, const BitCensusRow&) = default;
};

/// Each prime written in exactly `width` bits, leading zeros included.
BitCensusRow constant_bit_census(unsigned width, const ExecOptions& opts = {});

/// Each prime written in its minimal width.
BitCensusRow variable_bit_census(unsigned width, const ExecOptions& opts = {});

/// Rows for widths 1..max_width from one pass over the primes <= 2^max_width - 1.
/// Agrees row-for-row with the per-width functions.
std::vector<BitCensusRow> bit_census_table(unsigned max_width, BitMode mode,
                                           const ExecOptions& opts = {});

/// (width, ones / (zeros + ones)) for widths 2..max_width, constant mode.
std::vector<std::pair<unsigned, double>> ones_fraction_series(unsigned max_width,
                                                              const ExecOptions& opts = {});

}  // namespace primerecip
