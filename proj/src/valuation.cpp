#include "stepgcd/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace stepgcd {

unsigned ord(const mpz_class& m, PrimeBase p) {
    if (m == 0) throw std::invalid_argument("ord: the valuation of zero is undefined");
    mpz_class reduced;
    mpz_class prime(static_cast<unsigned long>(p.value()));
    return static_cast<unsigned>(
        mpz_remove(reduced.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t()));
}

CarryCount count_carries(std::uint64_t a, std::uint64_t b, PrimeBase base) {
    const std::uint64_t p = base.value();
    unsigned carries = 0;
    unsigned carry = 0;
    while (a != 0 || b != 0 || carry != 0) {
        // Column sums can exceed 64 bits when p is close to 2^64.
        const unsigned __int128 column = static_cast<unsigned __int128>(a % p) + (b % p) + carry;
        carry = column >= p ? 1u : 0u;
        carries += carry;
        a /= p;
        b /= p;
    }
    return carries;
}

namespace {

void require_k_in_range(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        throw std::invalid_argument("binomial valuation: k must satisfy 0 <= k <= n");
}

}  // namespace

unsigned ord_binomial_kummer(std::uint64_t n, std::uint64_t k, PrimeBase p) {
    require_k_in_range(n, k);
    return count_carries(k, n - k, p);
}

unsigned ord_binomial_legendre(std::uint64_t n, std::uint64_t k, PrimeBase p) {
    require_k_in_range(n, k);
    const auto factorial_ord = [&p](std::uint64_t m) {
        std::uint64_t total = 0;
        for (std::uint64_t t = m / p.value(); t != 0; t /= p.value()) total += t;
        return total;
    };
    return static_cast<unsigned>(factorial_ord(n) - factorial_ord(k) - factorial_ord(n - k));
}

bool is_exponent_subsequence(const ExponentSeq& sub, const ExponentSeq& full) {
    if (sub.base != full.base)
        throw std::invalid_argument("is_exponent_subsequence: sequences use different bases");
    return std::includes(full.exponents.begin(), full.exponents.end(), sub.exponents.begin(),
                         sub.exponents.end());
}

bool ord_zero_by_subsequence(std::uint64_t n, std::uint64_t k, PrimeBase p) {
    require_k_in_range(n, k);
    if (k == 0) return true;
    return is_exponent_subsequence(minimal_representation(k, p), minimal_representation(n, p));
}

}  // namespace stepgcd
