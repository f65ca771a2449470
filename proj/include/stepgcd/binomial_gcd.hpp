#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "stepgcd/primes_digits.hpp"

namespace stepgcd {

// The family {C(n, qk) : 0 < qk < n} for a step q. Requires n > q > 0,
// which keeps the index set nonempty (k = 1 always qualifies).
struct SteppedFamily {
    SteppedFamily(std::uint64_t n, std::uint64_t q);

    std::uint64_t n;
    std::uint64_t q;
};

// Prime factorization of the family GCD. exact_value is present when the
// big-integer oracle ran alongside the carry-counting path.
struct FactoredGCD {
    SteppedFamily family;
    std::map<std::uint64_t, unsigned> factors;  // prime -> positive exponent
    std::optional<mpz_class> exact_value;

    // Product of p^e over factors.
    mpz_class factored_value() const;
};

// Exact C(n, k) by the multiplicative recurrence
// C(n, j) = C(n, j-1) * (n-j+1) / j with exact division at each step.
mpz_class binomial_exact(std::uint64_t n, std::uint64_t k);

// Ascending multiples of q strictly between 0 and n; never empty.
std::vector<std::uint64_t> family_indices(const SteppedFamily& family);

// Big-integer GCD of the family, folding C(n, qk) along the row and
// stopping once the accumulator reaches 1.
mpz_class gcd_exact(const SteppedFamily& family);

// ord_p of the family GCD as a minimum of carry counts. No big-integer
// arithmetic on this path.
unsigned gcd_valuation_fast(const SteppedFamily& family, PrimeBase p);

// Factorization over all candidate primes <= n (no larger prime can
// divide any C(n, k)). The overload without the flag runs the exact
// oracle for n <= 512 and skips it above.
FactoredGCD gcd_factored(const SteppedFamily& family, bool with_exact);
FactoredGCD gcd_factored(const SteppedFamily& family);

}  // namespace stepgcd
