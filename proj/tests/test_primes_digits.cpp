#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "stepgcd/primes_digits.hpp"

using namespace stepgcd;

namespace {

std::vector<std::uint64_t> values(const std::vector<PrimeBase>& primes) {
    std::vector<std::uint64_t> out;
    for (PrimeBase p : primes) out.push_back(p.value());
    return out;
}

}  // namespace

TEST_CASE("PrimeBase verifies primality at construction") {
    CHECK(PrimeBase(2).value() == 2);
    CHECK(PrimeBase(29).value() == 29);
    CHECK(PrimeBase(2305843009213693951ull).value() == 2305843009213693951ull);
    CHECK_THROWS_AS(PrimeBase(0), std::invalid_argument);
    CHECK_THROWS_AS(PrimeBase(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeBase(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeBase(437), std::invalid_argument);  // 19 * 23
}

TEST_CASE("is_prime agrees with trial division on a small range") {
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        bool expect = n >= 2;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                expect = false;
                break;
            }
        CAPTURE(n);
        CHECK(is_prime(n) == expect);
    }
}

TEST_CASE("primes_up_to enumerates exactly the primes, ascending") {
    CHECK(primes_up_to(0).empty());
    CHECK(primes_up_to(1).empty());
    CHECK(values(primes_up_to(10)) == std::vector<std::uint64_t>{2, 3, 5, 7});
    const auto up30 = values(primes_up_to(30));
    CHECK(up30.back() == 29);
    CHECK(up30 == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(2000).size() == 303);
}

TEST_CASE("to_digits produces little-endian expansions that round-trip") {
    CHECK(to_digits(0, PrimeBase(5)).digits.empty());
    CHECK(to_digits(30, PrimeBase(5)).digits == std::vector<std::uint64_t>{0, 1, 1});
    CHECK(to_digits(30, PrimeBase(3)).digits == std::vector<std::uint64_t>{0, 1, 0, 1});

    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 29ull, 97ull}) {
        const PrimeBase base(p);
        for (std::uint64_t n = 0; n <= 3000; ++n) {
            const DigitExpansion d = to_digits(n, base);
            CAPTURE(n);
            CAPTURE(p);
            CHECK(d.value() == n);
            if (!d.digits.empty()) CHECK(d.digits.back() != 0);
            for (std::uint64_t digit : d.digits) CHECK(digit < p);
        }
    }
}

TEST_CASE("digit_sum equals both the digit total and the representation length") {
    CHECK(digit_sum(30, PrimeBase(3)) == 2);
    CHECK(digit_sum(30, PrimeBase(29)) == 2);
    CHECK(digit_sum(0, PrimeBase(2)) == 0);
    CHECK(digit_sum(0, PrimeBase(97)) == 0);

    for (std::uint64_t p : {2ull, 3ull, 7ull, 31ull}) {
        const PrimeBase base(p);
        for (std::uint64_t n = 1; n <= 2000; ++n) {
            const auto digits = to_digits(n, base).digits;
            const std::uint64_t total = std::accumulate(digits.begin(), digits.end(),
                                                        std::uint64_t{0});
            CAPTURE(n);
            CAPTURE(p);
            CHECK(digit_sum(n, base) == total);
            CHECK(digit_sum(n, base) == minimal_representation(n, base).exponents.size());
        }
    }
}

TEST_CASE("minimal_representation lists nondecreasing exponents that rebuild n") {
    CHECK(minimal_representation(30, PrimeBase(5)).exponents ==
          std::vector<std::uint32_t>{1, 2});
    CHECK(minimal_representation(6, PrimeBase(3)).exponents ==
          std::vector<std::uint32_t>{1, 1});
    CHECK(minimal_representation(7, PrimeBase(2)).exponents ==
          std::vector<std::uint32_t>{0, 1, 2});
    CHECK_THROWS_AS(minimal_representation(0, PrimeBase(5)), std::invalid_argument);

    for (std::uint64_t p : {2ull, 3ull, 5ull, 13ull}) {
        const PrimeBase base(p);
        for (std::uint64_t n = 1; n <= 2000; ++n) {
            const ExponentSeq rep = minimal_representation(n, base);
            CAPTURE(n);
            CAPTURE(p);
            CHECK(rep.value() == n);
            std::uint64_t run = 1;
            for (std::size_t i = 1; i < rep.exponents.size(); ++i) {
                CHECK(rep.exponents[i - 1] <= rep.exponents[i]);
                run = rep.exponents[i] == rep.exponents[i - 1] ? run + 1 : 1;
                CHECK(run < p);
            }
        }
    }
}

TEST_CASE("digit sums are congruent to n when every power of p is 1 mod q") {
    for (std::uint64_t q = 1; q <= 8; ++q)
        for (PrimeBase p : primes_up_to(200)) {
            if (p.value() % q != 1 % q) continue;
            for (std::uint64_t n = 0; n <= 1500; ++n) {
                CAPTURE(n);
                CAPTURE(q);
                CAPTURE(p.value());
                CHECK(digit_sum(n, p) % q == n % q);
            }
        }
}

TEST_CASE("digit sums are subadditive") {
    for (std::uint64_t p : {2ull, 3ull, 7ull}) {
        const PrimeBase base(p);
        for (std::uint64_t a = 0; a <= 300; a += 3)
            for (std::uint64_t b = 0; b <= 300; b += 7) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(p);
                CHECK(digit_sum(a + b, base) <= digit_sum(a, base) + digit_sum(b, base));
            }
    }
}
