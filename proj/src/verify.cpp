#include "stepgcd/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "stepgcd/valuation.hpp"

namespace stepgcd {

const char* to_string(Hypothesis h) {
    switch (h) {
        case Hypothesis::strict: return "strict";
        case Hypothesis::weakened: return "weakened";
        case Hypothesis::none: break;
    }
    return "none";
}

const char* to_string(VerifyMode m) {
    switch (m) {
        case VerifyMode::strict: return "strict";
        case VerifyMode::weakened: return "weakened";
        case VerifyMode::both: break;
    }
    return "both";
}

std::optional<VerifyMode> parse_mode(std::string_view s) {
    if (s == "strict") return VerifyMode::strict;
    if (s == "weakened") return VerifyMode::weakened;
    if (s == "both") return VerifyMode::both;
    return std::nullopt;
}

std::vector<PredictionRecord> VerificationReport::mismatches() const {
    std::vector<PredictionRecord> out;
    for (const auto& r : records)
        if (r.hypothesis != Hypothesis::none && !r.match) out.push_back(r);
    return out;
}

namespace {

struct NResult {
    std::vector<PredictionRecord> records;
    std::uint64_t oracle_checked = 0;
    std::uint64_t oracle_failures = 0;
};

std::pair<Hypothesis, std::optional<unsigned>> classify(const SteppedFamily& family,
                                                        PrimeBase p, VerifyMode mode) {
    const bool strict = p.value() % family.q == 1 % family.q;
    if (mode == VerifyMode::strict || (mode == VerifyMode::both && strict)) {
        if (strict) return {Hypothesis::strict, predict_gcd_ord(family, p).predicted_ord};
        return {Hypothesis::none, std::nullopt};
    }
    if (common_power_residue(family, p))
        return {Hypothesis::weakened, predict_weakened(family, p).predicted_ord};
    return {Hypothesis::none, std::nullopt};
}

NResult process_n(std::uint64_t n, std::uint64_t q_max, VerifyMode mode,
                  std::uint64_t exact_limit, const std::vector<PrimeBase>& primes) {
    NResult out;
    const auto prime_end =
        std::upper_bound(primes.begin(), primes.end(), n,
                         [](std::uint64_t v, PrimeBase p) { return v < p.value(); });
    for (std::uint64_t q = 1; q <= q_max && q < n; ++q) {
        const SteppedFamily family(n, q);
        std::optional<mpz_class> exact;
        if (n <= exact_limit) exact = gcd_exact(family);
        mpz_class fast_product = 1;
        mpz_class power;
        for (auto it = primes.begin(); it != prime_end; ++it) {
            const PrimeBase p = *it;
            const unsigned actual = gcd_valuation_fast(family, p);
            const auto [hypothesis, predicted] = classify(family, p, mode);
            const bool match = predicted.has_value() && *predicted == actual;
            out.records.push_back(
                PredictionRecord{n, q, p.value(), hypothesis, predicted, actual, match});
            if (exact) {
                ++out.oracle_checked;
                if (ord(*exact, p) != actual) ++out.oracle_failures;
                if (actual > 0) {
                    mpz_ui_pow_ui(power.get_mpz_t(), p.value(), actual);
                    fast_product *= power;
                }
            }
        }
        if (exact) {
            // No prime above n divides any C(n, k), so the per-prime
            // valuations must multiply back to the exact GCD.
            ++out.oracle_checked;
            if (fast_product != *exact) ++out.oracle_failures;
        }
    }
    return out;
}

}  // namespace

VerificationReport verify_grid(std::uint64_t n_max, std::uint64_t q_max, VerifyMode mode,
                               std::uint64_t exact_oracle_limit, unsigned jobs) {
    if (n_max <= 2) throw std::invalid_argument("verify_grid: requires n_max > 2");
    if (q_max < 1) throw std::invalid_argument("verify_grid: requires q_max >= 1");
    const auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.n_max = n_max;
    report.q_max = q_max;
    report.mode = mode;
    report.exact_oracle_limit = exact_oracle_limit;

    const std::vector<PrimeBase> primes = primes_up_to(n_max);
    std::vector<NResult> slots(n_max + 1);
    std::atomic<std::uint64_t> next{3};
    const auto worker = [&] {
        for (std::uint64_t n = next.fetch_add(1); n <= n_max; n = next.fetch_add(1))
            slots[n] = process_n(n, q_max, mode, exact_oracle_limit, primes);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::uint64_t n = 3; n <= n_max; ++n) {
        auto& slot = slots[n];
        report.oracle_checked += slot.oracle_checked;
        report.oracle_failures += slot.oracle_failures;
        for (auto& r : slot.records) {
            ++report.checked;
            if (r.hypothesis == Hypothesis::none)
                ++report.not_applicable;
            else if (r.match)
                ++report.matched;
            else
                ++report.mismatched;
            report.records.push_back(std::move(r));
        }
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string to_json_line(const PredictionRecord& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["q"] = r.q;
    j["p"] = r.p;
    j["hypothesis"] = to_string(r.hypothesis);
    if (r.predicted)
        j["predicted"] = *r.predicted;
    else
        j["predicted"] = "n/a";
    j["actual"] = r.actual;
    j["match"] = r.match;
    return j.dump();
}

std::string csv_header() { return "n,q,p,hypothesis,predicted,actual,match"; }

std::string to_csv_line(const PredictionRecord& r) {
    const std::string predicted = r.predicted ? std::to_string(*r.predicted) : "n/a";
    return std::to_string(r.n) + ',' + std::to_string(r.q) + ',' + std::to_string(r.p) + ',' +
           to_string(r.hypothesis) + ',' + predicted + ',' + std::to_string(r.actual) + ',' +
           (r.match ? "true" : "false");
}

void write_json(std::ostream& out, const VerificationReport& report) {
    for (const auto& r : report.records) out << to_json_line(r) << '\n';
}

void write_csv(std::ostream& out, const VerificationReport& report) {
    out << csv_header() << '\n';
    for (const auto& r : report.records) out << to_csv_line(r) << '\n';
}

void write_summary(std::ostream& out, const VerificationReport& report) {
    out << "grid: n_max=" << report.n_max << " q_max=" << report.q_max
        << " mode=" << to_string(report.mode)
        << " exact_oracle_limit=" << report.exact_oracle_limit << '\n';
    out << "checked=" << report.checked << " matched=" << report.matched
        << " mismatched=" << report.mismatched << " not_applicable=" << report.not_applicable
        << '\n';
    out << "oracle: checked=" << report.oracle_checked
        << " failures=" << report.oracle_failures << '\n';
    const auto bad = report.mismatches();
    if (bad.empty()) {
        out << "mismatches: none" << '\n';
    } else {
        for (const auto& r : bad)
            out << "mismatch: n=" << r.n << " q=" << r.q << " p=" << r.p
                << " hypothesis=" << to_string(r.hypothesis)
                << " predicted=" << (r.predicted ? std::to_string(*r.predicted) : "n/a")
                << " actual=" << r.actual << '\n';
    }
    out << "wall_time_s=" << report.wall_seconds << '\n';
}

int exit_code_for(const VerificationReport& report) {
    return report.mode == VerifyMode::strict && report.mismatched > 0 ? 2 : 0;
}

}  // namespace stepgcd
