#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "stepgcd/primes_digits.hpp"

namespace stepgcd {

// Carries observed in one base-p schoolbook addition; at most one per
// digit column of the larger addend, plus a final overflow column.
using CarryCount = unsigned;

// Exponent of the highest power of p dividing m. Rejects m = 0.
unsigned ord(const mpz_class& m, PrimeBase p);

// Number of carry events when adding a and b in base p, computed
// positionally without materializing the sum.
CarryCount count_carries(std::uint64_t a, std::uint64_t b, PrimeBase p);

// ord_p of C(n, k) as the carry count of k + (n - k) in base p.
unsigned ord_binomial_kummer(std::uint64_t n, std::uint64_t k, PrimeBase p);

// ord_p of C(n, k) through factorial valuations: floor(n/p) +
// floor(n/p^2) + ... for each of n!, k!, (n-k)!.
unsigned ord_binomial_legendre(std::uint64_t n, std::uint64_t k, PrimeBase p);

// Multiset containment of sorted exponent sequences over the same base.
bool is_exponent_subsequence(const ExponentSeq& sub, const ExponentSeq& full);

// True iff C(n, k) is coprime to p, decided by embedding the minimal
// representation of k into that of n.
bool ord_zero_by_subsequence(std::uint64_t n, std::uint64_t k, PrimeBase p);

}  // namespace stepgcd
