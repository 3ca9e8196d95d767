#pragma once

#include <stdexcept>
#include <string>

namespace primerecip {

// Input exceeds a documented operating ceiling (sieve limit, width, table size).
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// The denominator divides the base, so the expansion terminates and has no period.
class terminating_expansion_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A census ran past its deadline and was abandoned without emitting partial results.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace primerecip
