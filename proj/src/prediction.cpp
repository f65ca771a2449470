#include "stepgcd/prediction.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

#include "modarith.hpp"

namespace stepgcd {

namespace {

// p = 1 (mod q); the q = 1 case is vacuously true.
bool strict_hypothesis(std::uint64_t q, PrimeBase p) {
    return p.value() % q == 1 % q;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error(what);
    return r;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

Prediction predict_gcd_ord(const SteppedFamily& family, PrimeBase p) {
    const bool applicable = strict_hypothesis(family.q, p);
    unsigned predicted = 0;
    if (applicable) predicted = digit_sum(family.n, p) <= family.q ? 1u : 0u;
    return Prediction{family, p.value(), applicable, predicted};
}

unsigned predict_row_gcd_ord(std::uint64_t n, PrimeBase p) {
    if (n <= 1) throw std::invalid_argument("predict_row_gcd_ord: requires n > 1");
    std::uint64_t m = n;
    while (m % p.value() == 0) m /= p.value();
    return m == 1 ? 1u : 0u;
}

unsigned predict_even_row_gcd_ord(std::uint64_t n, PrimeBase p) {
    if (n <= 1) throw std::invalid_argument("predict_even_row_gcd_ord: requires n > 1");
    if (p.value() == 2) throw std::invalid_argument("predict_even_row_gcd_ord: p must be odd");
    const std::uint64_t row = checked_mul(2, n, "predict_even_row_gcd_ord: 2n overflows");
    return digit_sum(row, p) <= 2 ? 1u : 0u;
}

std::pair<Prediction, Prediction> predict_scaled_families(std::uint64_t n, std::uint64_t q,
                                                          PrimeBase p) {
    if (n <= 1) throw std::invalid_argument("predict_scaled_families: requires n > 1");
    if (q == 0) throw std::invalid_argument("predict_scaled_families: requires q > 0");
    if (!strict_hypothesis(q, p))
        throw std::invalid_argument(
            "predict_scaled_families: requires p congruent to 1 modulo q");
    const std::uint64_t multiple = checked_mul(q, n, "predict_scaled_families: q*n overflows");
    if (multiple == UINT64_MAX)
        throw std::overflow_error("predict_scaled_families: q*n+1 overflows");

    const auto residue_form = [&](SteppedFamily family) {
        const std::uint64_t rem = family.n % q;
        const std::uint64_t s = rem == 0 ? q : rem;  // unique s in (0, q], s = n (mod q)
        const unsigned predicted = digit_sum(family.n, p) == s ? 1u : 0u;
        assert(predicted == predict_gcd_ord(family, p).predicted_ord);
        return Prediction{family, p.value(), true, predicted};
    };
    return {residue_form(SteppedFamily(multiple, q)),
            residue_form(SteppedFamily(multiple + 1, q))};
}

std::optional<std::uint64_t> common_power_residue(const SteppedFamily& family, PrimeBase p) {
    if (std::gcd(p.value(), family.q) != 1) return std::nullopt;
    const ExponentSeq rep = minimal_representation(family.n, p);
    const std::uint64_t q = family.q;
    std::uint64_t power = 1 % q;
    std::uint32_t at = 0;
    std::optional<std::uint64_t> residue;
    for (std::uint32_t e : rep.exponents) {
        for (; at < e; ++at) power = detail::mulmod(power, p.value() % q, q);
        if (!residue)
            residue = power;
        else if (*residue != power)
            return std::nullopt;
    }
    return residue;
}

Prediction predict_weakened(const SteppedFamily& family, PrimeBase p) {
    if (!common_power_residue(family, p))
        throw std::invalid_argument(
            "predict_weakened: requires p coprime to q and a common power residue");
    return Prediction{family, p.value(), true,
                      digit_sum(family.n, p) <= family.q ? 1u : 0u};
}

Witness witness_zero_valuation(const SteppedFamily& family, PrimeBase p) {
    if (!strict_hypothesis(family.q, p))
        throw std::invalid_argument(
            "witness_zero_valuation: requires p congruent to 1 modulo q");
    const ExponentSeq rep = minimal_representation(family.n, p);
    if (rep.exponents.size() <= family.q)
        throw std::invalid_argument(
            "witness_zero_valuation: requires a digit sum exceeding q");
    std::uint64_t index = 0;
    std::uint64_t power = 1;
    std::uint32_t at = 0;
    for (std::uint64_t t = 0; t < family.q; ++t) {
        const std::uint32_t e = rep.exponents[t];
        for (; at < e; ++at) power *= p.value();
        index += power;
    }
    // Divisible by q because every power of p is 1 mod q; strictly inside
    // (0, n) because only q of more than q terms are summed.
    assert(index % family.q == 0 && 0 < index && index < family.n);
    return Witness{family, p.value(), index, 0};
}

Witness witness_unit_valuation(const SteppedFamily& family, PrimeBase p) {
    if (!strict_hypothesis(family.q, p))
        throw std::invalid_argument(
            "witness_unit_valuation: requires p congruent to 1 modulo q");
    const ExponentSeq rep = minimal_representation(family.n, p);
    if (rep.exponents.size() > family.q)
        throw std::invalid_argument(
            "witness_unit_valuation: requires a digit sum of at most q");
    const std::uint32_t top = rep.exponents.back();
    // top = 0 would force n = digit_sum(n) <= q, excluded by n > q.
    assert(top > 0);
    const std::uint64_t index = (p.value() - 1) * pow_u64(p.value(), top - 1);
    assert(index % family.q == 0 && 0 < index && index < family.n);
    return Witness{family, p.value(), index, 1};
}

}  // namespace stepgcd
