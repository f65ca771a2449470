#pragma once

#include <cstdint>
#include <vector>

namespace stepgcd {

// A verified prime serving as the radix for every digit operation.
// Constructing from a composite (or 0, 1) throws std::invalid_argument.
class PrimeBase {
public:
    explicit PrimeBase(std::uint64_t p);

    std::uint64_t value() const { return p_; }

    friend bool operator==(PrimeBase a, PrimeBase b) { return a.p_ == b.p_; }
    friend auto operator<=>(PrimeBase a, PrimeBase b) { return a.p_ <=> b.p_; }

private:
    struct verified_tag {};
    PrimeBase(std::uint64_t p, verified_tag) : p_(p) {}
    friend std::vector<PrimeBase> primes_up_to(std::uint64_t limit);

    std::uint64_t p_;
};

// Deterministic Miller-Rabin, valid over the full 64-bit range.
bool is_prime(std::uint64_t n);

// Every prime <= limit, ascending; empty when limit < 2.
std::vector<PrimeBase> primes_up_to(std::uint64_t limit);

// Base-p digits of a nonnegative integer, little-endian: digits[i] holds
// the coefficient of p^i. Zero has the empty expansion; otherwise the
// top digit is nonzero.
struct DigitExpansion {
    PrimeBase base;
    std::vector<std::uint64_t> digits;

    std::uint64_t value() const;
};

// The shortest way to write n as a sum of powers of p: exponents
// e_1 <= ... <= e_r with n = sum of p^{e_t}. No exponent repeats p or
// more times, and r equals the base-p digit sum of n.
struct ExponentSeq {
    PrimeBase base;
    std::vector<std::uint32_t> exponents;

    std::uint64_t value() const;
};

DigitExpansion to_digits(std::uint64_t n, PrimeBase p);

// Sum of the base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, PrimeBase p);

// Requires n >= 1.
ExponentSeq minimal_representation(std::uint64_t n, PrimeBase p);

}  // namespace stepgcd
