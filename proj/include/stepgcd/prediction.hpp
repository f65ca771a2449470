#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "stepgcd/binomial_gcd.hpp"
#include "stepgcd/primes_digits.hpp"

namespace stepgcd {

// Closed-form claim about ord_p of a stepped-family GCD. predicted_ord
// is 0 or 1 by construction and meaningful only when applicable.
struct Prediction {
    SteppedFamily family;
    std::uint64_t p;
    bool applicable;
    unsigned predicted_ord;
};

// An explicit family index certifying the minimum valuation: a multiple
// of q strictly inside (0, n) whose binomial has the asserted ord.
struct Witness {
    SteppedFamily family;
    std::uint64_t p;
    std::uint64_t index;
    unsigned asserted_ord;
};

// The main rule. Applicable iff p = 1 (mod q); then the predicted ord is
// 1 when the base-p digit sum of n is at most q and 0 otherwise. A prime
// outside the hypothesis yields applicable = false, not an error.
Prediction predict_gcd_ord(const SteppedFamily& family, PrimeBase p);

// q = 1 specialization: the interior of Pascal row n has GCD p exactly
// when n is a power of p, else 1. Returns the predicted ord_p.
unsigned predict_row_gcd_ord(std::uint64_t n, PrimeBase p);

// q = 2 specialization over the even entries of row 2n; rejects p = 2.
unsigned predict_even_row_gcd_ord(std::uint64_t n, PrimeBase p);

// Predictions for the families (q*n, q) and (q*n + 1, q), evaluated via
// the residue form of the digit-sum test (digit sum equal to the unique
// s in (0, q] congruent to the row index mod q).
std::pair<Prediction, Prediction> predict_scaled_families(std::uint64_t n, std::uint64_t q,
                                                          PrimeBase p);

// Common residue c mod q of every power in the minimal representation of
// n, provided p and q are coprime and the powers agree; nullopt otherwise.
std::optional<std::uint64_t> common_power_residue(const SteppedFamily& family, PrimeBase p);

// The digit-sum rule under the relaxed hypothesis above. Experimental:
// the harness verifies its outcomes empirically instead of asserting them.
Prediction predict_weakened(const SteppedFamily& family, PrimeBase p);

// Index p^{e_1} + ... + p^{e_q} with valuation 0. Requires the strict
// hypothesis and digit_sum(n, p) > q.
Witness witness_zero_valuation(const SteppedFamily& family, PrimeBase p);

// Index (p-1) * p^{e_r - 1} with valuation exactly 1. Requires the
// strict hypothesis and digit_sum(n, p) <= q.
Witness witness_unit_valuation(const SteppedFamily& family, PrimeBase p);

}  // namespace stepgcd
