#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "primerecip/parallel.hpp"

namespace primerecip {

inline constexpr std::uint64_t kMobiusCeiling = 1'000'000'000;

enum class CutoffKind { TermCount, PrimeBound };

std::string_view to_string(CutoffKind kind);

/// A finite-cutoff approximation of zeta(s) or 1/zeta(s).
struct ZetaPartial {
    double s = 0.0;
    CutoffKind cutoff_kind = CutoffKind::TermCount;
    std::uint64_t cutoff = 0;
    double value = 0.0;
    // ln(value). Exact accumulator for the product forms; for sums it is
    // derived from value and is NaN when value <= 0.
    double log_value = 0.0;
};

/// mu(n) for 1 <= n <= limit; entry 0 is unused and holds 0.
struct MobiusTable {
    std::uint64_t limit = 0;
    std::vector<std::int8_t> values;

    int operator[](std::uint64_t n) const { return values[n]; }
};

/// sum_{n=1}^{N} n^{-s}, accumulated from n = N downwards.
ZetaPartial zeta_partial_sum(double s, std::uint64_t terms);

/// prod_{p <= x} (1 - p^{-s}), accumulated as a sum of logs.
ZetaPartial euler_product_inverse(double s, std::uint64_t prime_bound,
                                  const ExecOptions& opts = {});

/// sum_{p <= x} ln(1 - p^{-s}).
double log_euler_partial(double s, std::uint64_t prime_bound, const ExecOptions& opts = {});

/// Linear sieve on smallest prime factors. limit <= 10^9.
MobiusTable mobius_sieve(std::uint64_t limit);

/// mu(n) from a full factorization of n.
int mobius_value(std::uint64_t n);

/// sum_{n=1}^{N} mu(n) n^{-s}, accumulated from n = N downwards.
ZetaPartial mobius_partial_sum(double s, std::uint64_t terms);

}  // namespace primerecip
