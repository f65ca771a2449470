#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "stepgcd/binomial_gcd.hpp"
#include "stepgcd/prediction.hpp"
#include "stepgcd/primes_digits.hpp"
#include "stepgcd/valuation.hpp"
#include "stepgcd/verify.hpp"

namespace {

std::string format_factors(const std::map<std::uint64_t, unsigned>& factors) {
    std::string out;
    for (const auto& [p, e] : factors) {
        if (!out.empty()) out += "·";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string format_factored(const stepgcd::FactoredGCD& f) {
    const mpz_class value = f.exact_value ? *f.exact_value : f.factored_value();
    std::string out = value.get_str();
    if (!f.factors.empty()) out += " = " + format_factors(f.factors);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace stepgcd;

    CLI::App app{"p-adic valuations and GCDs of stepped binomial families"};
    app.require_subcommand(1);

    std::uint64_t n = 0, q = 0, k = 0, p = 0;
    std::uint64_t n_max = 0, q_max = 1, exact_limit = 200;
    unsigned jobs = 1;
    bool factored = false, as_json = false, as_csv = false;
    std::string mode_str = "strict";

    auto* ord_cmd = app.add_subcommand("ord", "p-adic valuation of C(n, k) by carry counting");
    ord_cmd->add_option("--n", n, "upper index")->required();
    ord_cmd->add_option("--k", k, "lower index")->required();
    ord_cmd->add_option("--p", p, "prime base")->required();

    auto* gcd_cmd =
        app.add_subcommand("gcd", "exact GCD of the family {C(n, qk) : 0 < qk < n}");
    gcd_cmd->add_option("--n", n, "row index")->required();
    gcd_cmd->add_option("--q", q, "step")->required();
    gcd_cmd->add_flag("--factored", factored, "also factor the GCD over primes <= n");

    auto* predict_cmd =
        app.add_subcommand("predict", "closed-form valuation of the family GCD");
    predict_cmd->add_option("--n", n, "row index")->required();
    predict_cmd->add_option("--q", q, "step")->required();
    predict_cmd->add_option("--p", p, "prime base")->required();
    predict_cmd->add_option("--mode", mode_str, "strict|weakened|both")
        ->default_val("strict");

    auto* witness_cmd =
        app.add_subcommand("witness", "family index certifying the minimum valuation");
    witness_cmd->add_option("--n", n, "row index")->required();
    witness_cmd->add_option("--q", q, "step")->required();
    witness_cmd->add_option("--p", p, "prime base")->required();

    auto* verify_cmd = app.add_subcommand(
        "verify", "sweep a grid and compare predictions against carry counts");
    verify_cmd->add_option("--n-max", n_max, "largest row index")->required();
    verify_cmd->add_option("--q-max", q_max, "largest step")->default_val(1);
    verify_cmd->add_option("--mode", mode_str, "strict|weakened|both")
        ->default_val("strict");
    verify_cmd->add_option("--exact-limit", exact_limit,
                           "cross-check against the big-integer oracle up to this n");
    verify_cmd->add_option("--jobs", jobs, "worker threads over the n axis");
    auto* json_flag =
        verify_cmd->add_flag("--json", as_json, "records as JSON lines on stdout");
    auto* csv_flag = verify_cmd->add_flag("--csv", as_csv, "records as CSV on stdout");
    json_flag->excludes(csv_flag);

    auto* table_cmd =
        app.add_subcommand("table", "factored family GCD for each n up to a bound");
    table_cmd->add_option("--q", q, "step")->required();
    table_cmd->add_option("--n-max", n_max, "largest row index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*ord_cmd) {
            std::cout << ord_binomial_kummer(n, k, PrimeBase(p)) << '\n';
        } else if (*gcd_cmd) {
            const SteppedFamily family(n, q);
            if (factored)
                std::cout << format_factored(gcd_factored(family)) << '\n';
            else
                std::cout << gcd_exact(family).get_str() << '\n';
        } else if (*predict_cmd) {
            const auto mode = parse_mode(mode_str);
            if (!mode) throw std::invalid_argument("mode must be strict, weakened or both");
            const SteppedFamily family(n, q);
            const PrimeBase base(p);
            const bool strict_ok = base.value() % q == 1 % q;
            if (*mode != VerifyMode::weakened && strict_ok) {
                std::cout << "applicable, ord "
                          << predict_gcd_ord(family, base).predicted_ord << '\n';
            } else if (*mode != VerifyMode::strict) {
                if (const auto residue = common_power_residue(family, base)) {
                    std::cout << "applicable (weakened, residue " << *residue << "), ord "
                              << predict_weakened(family, base).predicted_ord << '\n';
                } else {
                    std::cout << "not applicable" << '\n';
                }
            } else {
                std::cout << "not applicable" << '\n';
            }
        } else if (*witness_cmd) {
            const SteppedFamily family(n, q);
            const PrimeBase base(p);
            if (base.value() % q != 1 % q)
                throw std::invalid_argument("witness requires p congruent to 1 modulo q");
            const Witness w = digit_sum(n, base) > q ? witness_zero_valuation(family, base)
                                                     : witness_unit_valuation(family, base);
            std::cout << "index " << w.index << ", ord " << w.asserted_ord << '\n';
        } else if (*verify_cmd) {
            const auto mode = parse_mode(mode_str);
            if (!mode) throw std::invalid_argument("mode must be strict, weakened or both");
            const VerificationReport report =
                verify_grid(n_max, q_max, *mode, exact_limit, jobs);
            if (as_json) {
                write_json(std::cout, report);
                write_summary(std::cerr, report);
            } else if (as_csv) {
                write_csv(std::cout, report);
                write_summary(std::cerr, report);
            } else {
                write_summary(std::cout, report);
            }
            return exit_code_for(report);
        } else if (*table_cmd) {
            if (q == 0) throw std::invalid_argument("table requires q > 0");
            for (std::uint64_t row = q + 1; row <= n_max; ++row)
                std::cout << "n=" << row << ": "
                          << format_factored(gcd_factored(SteppedFamily(row, q))) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
