#include "primerecip/recipcensus.hpp"

#include <stdexcept>
#include <string>

namespace primerecip {

namespace {

std::size_t chunk_count(std::size_t n, std::size_t per_chunk) {
    return (n + per_chunk - 1) / per_chunk;
}

template <class Fn>
void for_chunk(const std::vector<std::uint64_t>& primes, std::size_t per_chunk, std::size_t i,
               Fn&& fn) {
    const std::size_t begin = i * per_chunk;
    const std::size_t end = std::min(primes.size(), begin + per_chunk);
    for (std::size_t k = begin; k < end; ++k) fn(primes[k]);
}

void check_opts(const CensusOptions& opts) {
    if (opts.primes_per_chunk == 0) throw std::invalid_argument("primes_per_chunk must be positive");
}

void check_base(std::uint64_t base) {
    if (base < 2 || base > kMaxBase)
        throw std::invalid_argument("base must lie in [2, " + std::to_string(kMaxBase) + "]");
}

}  // namespace

RangeCensus& RangeCensus::merge(const RangeCensus& other) {
    if (other.range.lo() != range.hi() + 1 || other.base != base)
        throw std::invalid_argument("RangeCensus::merge: censuses are not adjacent");
    range = PrimeRange{range.lo(), other.range.hi()};
    prime_count += other.prime_count;
    zeros_exceed += other.zeros_exceed;
    ones_exceed += other.ones_exceed;
    equal += other.equal;
    max_length_count += other.max_length_count;
    excluded += other.excluded;
    return *this;
}

RangeCensus imbalance_census(const PrimeRange& range, const CensusOptions& opts) {
    check_opts(opts);
    const auto primes = primes_in_range(range);
    const std::size_t per = opts.primes_per_chunk;

    auto parts = run_chunks<RangeCensus>(chunk_count(primes.size(), per), opts.exec, [&](std::size_t i) {
        RangeCensus c;
        for_chunk(primes, per, i, [&](std::uint64_t p) {
            ++c.prime_count;
            if (p == 2) {
                ++c.excluded;
                return;
            }
            const auto prof = profile(p, 2, DigitRule::Expansion, opts.seed);
            const auto zeros = prof.digit_counts[0];
            const auto ones = prof.digit_counts[1];
            if (zeros > ones)
                ++c.zeros_exceed;
            else if (ones > zeros)
                ++c.ones_exceed;
            else
                ++c.equal;
            if (prof.max_length) ++c.max_length_count;
        });
        return c;
    });

    RangeCensus total;
    total.range = range;
    total.base = 2;
    for (const auto& c : parts) {
        total.prime_count += c.prime_count;
        total.zeros_exceed += c.zeros_exceed;
        total.ones_exceed += c.ones_exceed;
        total.equal += c.equal;
        total.max_length_count += c.max_length_count;
        total.excluded += c.excluded;
    }
    return total;
}

DigitTotals digit_totals(const PrimeRange& range, std::uint64_t base, DigitRule rule,
                         const CensusOptions& opts) {
    check_opts(opts);
    check_base(base);
    const auto primes = primes_in_range(range);
    const std::size_t per = opts.primes_per_chunk;

    struct Partial {
        std::vector<std::uint64_t> totals;
        std::uint64_t excluded = 0;
        std::uint64_t period_sum = 0;
    };
    auto parts = run_chunks<Partial>(chunk_count(primes.size(), per), opts.exec, [&](std::size_t i) {
        Partial part;
        part.totals.assign(base, 0);
        for_chunk(primes, per, i, [&](std::uint64_t p) {
            if (base % p == 0) {
                ++part.excluded;
                return;
            }
            const auto prof = profile(p, base, rule, opts.seed);
            for (std::uint64_t d = 0; d < base; ++d) part.totals[d] += prof.digit_counts[d];
            part.period_sum += prof.period;
        });
        return part;
    });

    DigitTotals out;
    out.range = range;
    out.base = base;
    out.rule = rule;
    out.totals.assign(base, 0);
    for (const auto& part : parts) {
        for (std::uint64_t d = 0; d < base; ++d) out.totals[d] += part.totals[d];
        out.excluded += part.excluded;
        out.period_sum += part.period_sum;
    }
    return out;
}

std::vector<NonMaxRun> find_nonmax_runs(const PrimeRange& range, std::uint64_t base,
                                        std::uint64_t min_length, const CensusOptions& opts) {
    check_opts(opts);
    check_base(base);
    if (min_length == 0) throw std::invalid_argument("min_length must be at least 1");
    const auto primes = primes_in_range(range);
    const std::size_t per = opts.primes_per_chunk;

    enum Kind : std::uint8_t { kMax, kNonMax, kExcluded };
    auto parts = run_chunks<std::vector<Kind>>(
        chunk_count(primes.size(), per), opts.exec, [&](std::size_t i) {
            std::vector<Kind> kinds;
            for_chunk(primes, per, i, [&](std::uint64_t p) {
                if (base % p == 0)
                    kinds.push_back(kExcluded);
                else
                    kinds.push_back(is_max_length(base, p, opts.seed) ? kMax : kNonMax);
            });
            return kinds;
        });

    std::vector<Kind> kinds;
    kinds.reserve(primes.size());
    for (const auto& part : parts) kinds.insert(kinds.end(), part.begin(), part.end());

    std::vector<NonMaxRun> runs;
    std::size_t k = 0;
    while (k < kinds.size()) {
        if (kinds[k] != kNonMax) {
            ++k;
            continue;
        }
        std::size_t end = k;
        while (end + 1 < kinds.size() && kinds[end + 1] == kNonMax) ++end;
        const std::uint64_t length = end - k + 1;
        if (length >= min_length) {
            runs.push_back(NonMaxRun{primes[k], primes[end], length,
                                     k == 0 || end + 1 == kinds.size()});
        }
        k = end + 1;
    }
    return runs;
}

}  // namespace primerecip
