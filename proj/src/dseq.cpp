#include "primerecip/dseq.hpp"

#include <stdexcept>
#include <string>

#include "primerecip/errors.hpp"
#include "primerecip/primes.hpp"

namespace primerecip {

namespace {

using u128 = unsigned __int128;

void check_base(std::uint64_t base) {
    if (base < 2 || base > kMaxBase)
        throw std::invalid_argument("base must lie in [2, " + std::to_string(kMaxBase) + "]");
}

void check_reciprocal(std::uint64_t p, std::uint64_t base) {
    check_base(base);
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
    if (base % p == 0)
        throw terminating_expansion_error("terminating expansion: " + std::to_string(p) +
                                          " divides base " + std::to_string(base));
}

// Digits are produced from the running remainder r_{i-1} < p:
//   expansion: d = floor(base * r / p), r' = base * r mod p
//   residue:   r' = base * r mod p,     d = r' mod base
// When p * base fits in 64 bits a single native division does both.
struct Stepper {
    std::uint64_t p;
    std::uint64_t base;
    bool narrow;

    Stepper(std::uint64_t p_, std::uint64_t base_)
        : p(p_), base(base_), narrow(p_ <= UINT64_MAX / base_) {}

    // Returns the expansion digit and advances r.
    unsigned expansion(std::uint64_t& r) const {
        if (narrow) {
            const std::uint64_t x = r * base;
            const std::uint64_t d = x / p;
            r = x - d * p;
            return static_cast<unsigned>(d);
        }
        const u128 x = static_cast<u128>(r) * base;
        const auto d = static_cast<std::uint64_t>(x / p);
        r = static_cast<std::uint64_t>(x - static_cast<u128>(d) * p);
        return static_cast<unsigned>(d);
    }

    unsigned residue(std::uint64_t& r) const {
        r = narrow ? r * base % p : mul_mod(r, base, p);
        return static_cast<unsigned>(r % base);
    }

    unsigned next(std::uint64_t& r, DigitRule rule) const {
        return rule == DigitRule::Expansion ? expansion(r) : residue(r);
    }
};

// Counts of the first n digits of 1/p.
std::vector<std::uint64_t> tally_digits(std::uint64_t p, std::uint64_t base, std::uint64_t n,
                                        DigitRule rule) {
    std::vector<std::uint64_t> counts(base, 0);
    std::uint64_t r = 1;
    if (base == 2 && p < (std::uint64_t{1} << 63)) {
        // Both rules give d = [2r >= p] in base 2.
        std::uint64_t ones = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            r <<= 1;
            const std::uint64_t d = r >= p;
            ones += d;
            r -= p & (0 - d);
        }
        counts[0] = n - ones;
        counts[1] = ones;
        return counts;
    }
    const Stepper step(p, base);
    if (rule == DigitRule::Expansion) {
        for (std::uint64_t i = 0; i < n; ++i) ++counts[step.expansion(r)];
    } else {
        for (std::uint64_t i = 0; i < n; ++i) ++counts[step.residue(r)];
    }
    return counts;
}

}  // namespace

std::string_view to_string(DigitRule rule) {
    return rule == DigitRule::Expansion ? "expansion" : "residue";
}

DigitRule parse_digit_rule(std::string_view text) {
    if (text == "expansion") return DigitRule::Expansion;
    if (text == "residue") return DigitRule::PowerResidue;
    throw std::invalid_argument("unknown digit rule '" + std::string(text) +
                                "' (expected expansion or residue)");
}

unsigned digit_at(std::uint64_t p, std::uint64_t base, std::uint64_t i, DigitRule rule) {
    check_reciprocal(p, base);
    if (i == 0) throw std::domain_error("digit index starts at 1");
    const Stepper step(p, base);
    if (rule == DigitRule::Expansion) {
        std::uint64_t r = pow_mod(base, i - 1, p);
        return step.expansion(r);
    }
    return static_cast<unsigned>(pow_mod(base, i, p) % base);
}

std::vector<unsigned> expand(std::uint64_t p, std::uint64_t base, std::uint64_t n,
                             DigitRule rule) {
    check_reciprocal(p, base);
    std::vector<unsigned> digits;
    digits.reserve(n);
    const Stepper step(p, base);
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < n; ++i) digits.push_back(step.next(r, rule));
    return digits;
}

std::vector<unsigned> expand_fraction(std::uint64_t k, std::uint64_t p, std::uint64_t base,
                                      std::uint64_t n) {
    check_reciprocal(p, base);
    if (k == 0 || k >= p)
        throw std::domain_error("expand_fraction: numerator must lie in [1, p - 1]");
    std::vector<unsigned> digits;
    digits.reserve(n);
    const Stepper step(p, base);
    std::uint64_t r = k;
    for (std::uint64_t i = 0; i < n; ++i) digits.push_back(step.expansion(r));
    return digits;
}

std::vector<std::uint64_t> tally_period_digits(std::uint64_t p, std::uint64_t base,
                                               std::uint64_t period, DigitRule rule) {
    check_reciprocal(p, base);
    return tally_digits(p, base, period, rule);
}

ReciprocalProfile profile(std::uint64_t p, std::uint64_t base, DigitRule rule,
                          std::uint64_t seed) {
    check_reciprocal(p, base);
    ReciprocalProfile out;
    out.p = p;
    out.base = base;
    out.rule = rule;
    out.period = multiplicative_order(base, p, seed);
    out.max_length = out.period == p - 1;
    out.half_complement = out.period % 2 == 0 && pow_mod(base, out.period / 2, p) == p - 1;

    if (out.half_complement && rule == DigitRule::Expansion) {
        // r_{i + t/2} = p - r_i, hence d_{i + t/2} = base - 1 - d_i.
        const auto half = tally_digits(p, base, out.period / 2, rule);
        out.digit_counts.assign(base, 0);
        for (std::uint64_t d = 0; d < base; ++d) out.digit_counts[d] = half[d] + half[base - 1 - d];
    } else {
        out.digit_counts = tally_digits(p, base, out.period, rule);
    }
    return out;
}

}  // namespace primerecip
