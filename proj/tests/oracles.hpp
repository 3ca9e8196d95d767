#pragma once

// Slow, obviously-correct reference computations. Nothing here calls into
// the library's arithmetic.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 2; k <= n; ++k)
        if (is_prime(k)) out.push_back(k);
    return out;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    BigInt x = BigInt(a) * BigInt(b) % BigInt(m);
    return x.convert_to<std::uint64_t>();
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    BigInt r = boost::multiprecision::powm(BigInt(b), BigInt(e), BigInt(m));
    return r.convert_to<std::uint64_t>();
}

// Least t with b^t == 1 mod p by repeated multiplication.
inline std::uint64_t order(std::uint64_t b, std::uint64_t p) {
    std::uint64_t x = b % p;
    for (std::uint64_t t = 1;; ++t) {
        if (x == 1) return t;
        x = x * b % p;
    }
}

// Schoolbook long division of num/den in the given base: first n digits.
inline std::vector<unsigned> long_division(std::uint64_t num, std::uint64_t den,
                                           std::uint64_t base, std::size_t n) {
    std::vector<unsigned> digits;
    std::uint64_t rem = num % den;
    for (std::size_t i = 0; i < n; ++i) {
        rem *= base;
        digits.push_back(static_cast<unsigned>(rem / den));
        rem %= den;
    }
    return digits;
}

// Smallest t such that the digit sequence repeats with period t from the start.
inline std::size_t sequence_period(const std::vector<unsigned>& d) {
    for (std::size_t t = 1; t <= d.size(); ++t) {
        bool ok = true;
        for (std::size_t i = t; i < d.size() && ok; ++i) ok = d[i] == d[i - t];
        if (ok) return t;
    }
    return d.size();
}

inline int mobius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        n /= q;
        if (n % q == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

inline std::string binary(std::uint64_t v, unsigned width) {
    std::string s;
    for (unsigned i = width; i-- > 0;) s.push_back(((v >> i) & 1) ? '1' : '0');
    return s;
}

inline std::string binary(std::uint64_t v) {
    std::string s;
    while (v) {
        s.insert(s.begin(), (v & 1) ? '1' : '0');
        v >>= 1;
    }
    return s;
}

}  // namespace oracle
