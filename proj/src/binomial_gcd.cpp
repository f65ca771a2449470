#include "stepgcd/binomial_gcd.hpp"

#include <algorithm>
#include <stdexcept>

#include "stepgcd/valuation.hpp"

namespace stepgcd {

SteppedFamily::SteppedFamily(std::uint64_t n_, std::uint64_t q_) : n(n_), q(q_) {
    if (q == 0 || n <= q) throw std::invalid_argument("SteppedFamily requires n > q > 0");
}

mpz_class FactoredGCD::factored_value() const {
    mpz_class prod = 1;
    mpz_class power;
    for (const auto& [prime, exponent] : factors) {
        mpz_ui_pow_ui(power.get_mpz_t(), prime, exponent);
        prod *= power;
    }
    return prod;
}

mpz_class binomial_exact(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::invalid_argument("binomial_exact: k must satisfy 0 <= k <= n");
    if (n - k < k) k = n - k;
    mpz_class c = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        // Each division is exact: C(n, j-1) * (n-j+1) = C(n, j) * j.
        mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), n - j + 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j);
    }
    return c;
}

std::vector<std::uint64_t> family_indices(const SteppedFamily& family) {
    std::vector<std::uint64_t> out;
    out.reserve((family.n - 1) / family.q);
    for (std::uint64_t j = family.q; j < family.n; j += family.q) out.push_back(j);
    return out;
}

mpz_class gcd_exact(const SteppedFamily& family) {
    mpz_class g = 0;
    mpz_class c = 1;  // C(n, j), advanced incrementally along the row
    std::uint64_t j = 0;
    for (std::uint64_t index = family.q; index < family.n; index += family.q) {
        while (j < index) {
            ++j;
            mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), family.n - j + 1);
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

unsigned gcd_valuation_fast(const SteppedFamily& family, PrimeBase p) {
    unsigned best = ~0u;
    for (std::uint64_t index = family.q; index < family.n; index += family.q) {
        best = std::min(best, count_carries(index, family.n - index, p));
        if (best == 0) break;
    }
    return best;
}

FactoredGCD gcd_factored(const SteppedFamily& family, bool with_exact) {
    FactoredGCD out{family, {}, std::nullopt};
    for (PrimeBase p : primes_up_to(family.n)) {
        const unsigned v = gcd_valuation_fast(family, p);
        if (v > 0) out.factors.emplace(p.value(), v);
    }
    if (with_exact) out.exact_value = gcd_exact(family);
    return out;
}

FactoredGCD gcd_factored(const SteppedFamily& family) {
    return gcd_factored(family, family.n <= 512);
}

}  // namespace stepgcd
