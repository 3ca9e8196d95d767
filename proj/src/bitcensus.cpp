#include "primerecip/bitcensus.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "primerecip/errors.hpp"
#include "primerecip/primes.hpp"

namespace primerecip {

namespace {

constexpr std::uint64_t kNumbersPerChunk = std::uint64_t{1} << 24;

// Prime count and total popcount, bucketed by minimal bit length.
struct LengthTally {
    std::array<std::uint64_t, kMaxBitWidth + 1> count{};
    std::array<std::uint64_t, kMaxBitWidth + 1> ones{};

    void add(const LengthTally& o) {
        for (std::size_t i = 0; i <= kMaxBitWidth; ++i) {
            count[i] += o.count[i];
            ones[i] += o.ones[i];
        }
    }
};

void check_width(unsigned width) {
    if (width == 0) throw std::invalid_argument("bit width must be at least 1");
    if (width > kMaxBitWidth) throw capacity_error("bit width above 32");
}

LengthTally tally_by_length(unsigned max_width, const ExecOptions& opts) {
    LengthTally total;
    const std::uint64_t top = (std::uint64_t{1} << max_width) - 1;
    if (top < 2) return total;

    const std::uint64_t span = top - 2 + 1;
    const std::size_t n_chunks = (span + kNumbersPerChunk - 1) / kNumbersPerChunk;
    auto parts = run_chunks<LengthTally>(n_chunks, opts, [&](std::size_t i) {
        LengthTally t;
        const std::uint64_t lo = 2 + i * kNumbersPerChunk;
        const std::uint64_t hi = std::min(top, lo + kNumbersPerChunk - 1);
        for_each_prime_segment(PrimeRange{lo, hi}, [&](std::span<const std::uint64_t> seg) {
            for (std::uint64_t p : seg) {
                const auto len = static_cast<std::size_t>(std::bit_width(p));
                ++t.count[len];
                t.ones[len] += static_cast<std::uint64_t>(std::popcount(p));
            }
        });
        return t;
    });
    for (const auto& part : parts) total.add(part);
    return total;
}

BitCensusRow row_from(const LengthTally& t, unsigned width, BitMode mode) {
    BitCensusRow row;
    row.width = width;
    std::uint64_t length_sum = 0;
    for (unsigned len = 1; len <= width; ++len) {
        row.prime_count += t.count[len];
        row.ones += t.ones[len];
        length_sum += len * t.count[len];
    }
    const std::uint64_t digits = mode == BitMode::Constant ? width * row.prime_count : length_sum;
    row.zeros = digits - row.ones;
    row.total = digits;
    return row;
}

}  // namespace

BitCensusRow constant_bit_census(unsigned width, const ExecOptions& opts) {
    check_width(width);
    return row_from(tally_by_length(width, opts), width, BitMode::Constant);
}

BitCensusRow variable_bit_census(unsigned width, const ExecOptions& opts) {
    check_width(width);
    return row_from(tally_by_length(width, opts), width, BitMode::Variable);
}

std::vector<BitCensusRow> bit_census_table(unsigned max_width, BitMode mode,
                                           const ExecOptions& opts) {
    check_width(max_width);
    const auto tally = tally_by_length(max_width, opts);
    std::vector<BitCensusRow> rows;
    rows.reserve(max_width);
    for (unsigned w = 1; w <= max_width; ++w) rows.push_back(row_from(tally, w, mode));
    return rows;
}

std::vector<std::pair<unsigned, double>> ones_fraction_series(unsigned max_width,
                                                              const ExecOptions& opts) {
    if (max_width < 2) throw std::invalid_argument("ones_fraction_series: max_width must be >= 2");
    std::vector<std::pair<unsigned, double>> series;
    for (const auto& row : bit_census_table(max_width, BitMode::Constant, opts)) {
        if (row.width < 2) continue;
        series.emplace_back(row.width,
                            static_cast<double>(row.ones) / static_cast<double>(row.total));
    }
    return series;
}

}  // namespace primerecip
