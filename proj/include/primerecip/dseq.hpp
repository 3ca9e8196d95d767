#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "primerecip/modarith.hpp"

namespace primerecip {

inline constexpr std::uint64_t kMaxBase = 65536;

/// How the i-th digit of a prime reciprocal is produced.
///   Expansion:     floor(base * r_{i-1} / p) with r_0 = 1, r_i = base * r_{i-1} mod p,
///                  i.e. the true radix expansion of 1/p.
///   PowerResidue:  (base^i mod p) mod base.
/// The two coincide for base 2, and more generally whenever p == -1 (mod base).
enum class DigitRule { Expansion, PowerResidue };

std::string_view to_string(DigitRule rule);
/// Accepts "expansion" or "residue". Throws std::invalid_argument otherwise.
DigitRule parse_digit_rule(std::string_view text);

struct ReciprocalProfile {
    std::uint64_t p = 0;
    std::uint64_t base = 0;
    DigitRule rule = DigitRule::Expansion;
    std::uint64_t period = 0;
    bool max_length = false;
    // base^(period/2) == p - 1; for the expansion rule the second half of the
    // period is then the digit-wise complement (d -> base-1-d) of the first.
    bool half_complement = false;
    std::vector<std::uint64_t> digit_counts;  // size == base
};

/// Digit i (1-based) of 1/p. Throws terminating_expansion_error when p | base,
/// std::domain_error when p is not prime or i == 0.
unsigned digit_at(std::uint64_t p, std::uint64_t base, std::uint64_t i,
                  DigitRule rule = DigitRule::Expansion);

/// First n digits of 1/p, one modular multiplication per digit.
std::vector<unsigned> expand(std::uint64_t p, std::uint64_t base, std::uint64_t n,
                             DigitRule rule = DigitRule::Expansion);

/// First n fractional digits of k/p (true expansion). Requires 1 <= k < p.
std::vector<unsigned> expand_fraction(std::uint64_t k, std::uint64_t p, std::uint64_t base,
                                      std::uint64_t n);

/// Period, max-length flag and digit counts over exactly one period of 1/p.
ReciprocalProfile profile(std::uint64_t p, std::uint64_t base,
                          DigitRule rule = DigitRule::Expansion,
                          std::uint64_t seed = kDefaultFactorSeed);

/// Tallies every digit of the period directly, without the half-complement
/// shortcut used by profile(). Exposed for cross-checking.
std::vector<std::uint64_t> tally_period_digits(std::uint64_t p, std::uint64_t base,
                                               std::uint64_t period, DigitRule rule);

}  // namespace primerecip
