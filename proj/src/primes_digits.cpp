#include "stepgcd/primes_digits.hpp"

#include <stdexcept>
#include <string>

#include "modarith.hpp"

namespace stepgcd {

namespace {

// Strong probable-prime test for odd n > 2.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = detail::mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull})
        if (n % p == 0) return n == p;
    if (n < 41 * 41) return true;
    // This base set is deterministic below 2^64.
    for (std::uint64_t a :
         {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
        if (!strong_probable_prime(n, a)) return false;
    return true;
}

PrimeBase::PrimeBase(std::uint64_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimeBase: " + std::to_string(p) + " is not prime");
}

std::vector<PrimeBase> primes_up_to(std::uint64_t limit) {
    std::vector<PrimeBase> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(PrimeBase(i, PrimeBase::verified_tag{}));
        if (i <= limit / i)
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::uint64_t DigitExpansion::value() const {
    std::uint64_t acc = 0;
    for (std::size_t i = digits.size(); i-- > 0;) acc = acc * base.value() + digits[i];
    return acc;
}

std::uint64_t ExponentSeq::value() const {
    std::uint64_t acc = 0;
    std::uint64_t power = 1;
    std::uint32_t at = 0;
    for (std::uint32_t e : exponents) {
        for (; at < e; ++at) power *= base.value();
        acc += power;
    }
    return acc;
}

DigitExpansion to_digits(std::uint64_t n, PrimeBase p) {
    DigitExpansion out{p, {}};
    for (; n != 0; n /= p.value()) out.digits.push_back(n % p.value());
    return out;
}

std::uint64_t digit_sum(std::uint64_t n, PrimeBase p) {
    std::uint64_t s = 0;
    for (; n != 0; n /= p.value()) s += n % p.value();
    return s;
}

ExponentSeq minimal_representation(std::uint64_t n, PrimeBase p) {
    if (n == 0) throw std::invalid_argument("minimal_representation: n must be positive");
    ExponentSeq out{p, {}};
    std::uint32_t pos = 0;
    for (; n != 0; n /= p.value(), ++pos) {
        const std::uint64_t d = n % p.value();
        for (std::uint64_t c = 0; c < d; ++c) out.exponents.push_back(pos);
    }
    return out;
}

}  // namespace stepgcd
