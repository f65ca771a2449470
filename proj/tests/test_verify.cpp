#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "stepgcd/verify.hpp"

using namespace stepgcd;

namespace {

std::string records_as_json(const VerificationReport& report) {
    std::ostringstream out;
    write_json(out, report);
    return out.str();
}

}  // namespace

TEST_CASE("verify_grid validates its bounds") {
    CHECK_THROWS_AS(verify_grid(2, 1, VerifyMode::strict, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_grid(10, 0, VerifyMode::strict, 0), std::invalid_argument);
}

TEST_CASE("strict sweep up to n = 30 has no mismatches") {
    const VerificationReport report = verify_grid(30, 2, VerifyMode::strict, 30);
    CHECK(report.mismatched == 0);
    CHECK(report.oracle_failures == 0);
    CHECK(report.oracle_checked > 0);
    CHECK(report.checked == report.matched + report.mismatched + report.not_applicable);
    CHECK(report.checked == report.records.size());
}

TEST_CASE("triples outside the hypothesis are recorded, not skipped") {
    const VerificationReport report = verify_grid(6, 5, VerifyMode::strict, 6);
    const auto it = std::find_if(report.records.begin(), report.records.end(),
                                 [](const PredictionRecord& r) {
                                     return r.n == 6 && r.q == 3 && r.p == 2;
                                 });
    REQUIRE(it != report.records.end());
    CHECK(it->hypothesis == Hypothesis::none);
    CHECK_FALSE(it->predicted.has_value());
    CHECK(it->actual == 2);
    CHECK(report.not_applicable > 0);
}

TEST_CASE("the smallest grid checks exactly the two primes of n = 3") {
    const VerificationReport report = verify_grid(3, 1, VerifyMode::strict, 3);
    CHECK(report.checked == 2);
    CHECK(report.matched == 2);
    CHECK(report.mismatched == 0);
    CHECK(report.not_applicable == 0);
}

TEST_CASE("records come out sorted by (n, q, p)") {
    const VerificationReport report = verify_grid(40, 3, VerifyMode::both, 0, 3);
    const auto key = [](const PredictionRecord& r) { return std::array{r.n, r.q, r.p}; };
    CHECK(std::is_sorted(report.records.begin(), report.records.end(),
                         [&](const auto& a, const auto& b) { return key(a) < key(b); }));
}

TEST_CASE("record streams do not depend on the worker count") {
    const VerificationReport one = verify_grid(60, 4, VerifyMode::strict, 40, 1);
    const VerificationReport five = verify_grid(60, 4, VerifyMode::strict, 40, 5);
    CHECK(records_as_json(one) == records_as_json(five));
    CHECK(one.checked == five.checked);
    CHECK(one.matched == five.matched);
    CHECK(one.mismatched == five.mismatched);
    CHECK(one.not_applicable == five.not_applicable);
    CHECK(one.oracle_checked == five.oracle_checked);
    CHECK(one.oracle_failures == five.oracle_failures);
}

TEST_CASE("weakened sweep never misses where the strict hypothesis holds") {
    const VerificationReport report = verify_grid(60, 4, VerifyMode::weakened, 0);
    for (const auto& r : report.mismatches()) {
        CAPTURE(r.n);
        CAPTURE(r.q);
        CAPTURE(r.p);
        CHECK(r.p % r.q != 1 % r.q);
    }
}

TEST_CASE("mode both labels strict triples strict and relaxed ones weakened") {
    const VerificationReport report = verify_grid(20, 4, VerifyMode::both, 0);
    bool saw_strict = false, saw_weakened = false;
    for (const auto& r : report.records) {
        if (r.hypothesis == Hypothesis::strict) {
            saw_strict = true;
            CHECK(r.p % r.q == 1 % r.q);
        }
        if (r.hypothesis == Hypothesis::weakened) {
            saw_weakened = true;
            CHECK(r.p % r.q != 1 % r.q);
        }
    }
    CHECK(saw_strict);
    CHECK(saw_weakened);
}

TEST_CASE("record serialization formats") {
    const PredictionRecord hit{30, 2, 29, Hypothesis::strict, 1u, 1, true};
    CHECK(to_json_line(hit) ==
          R"({"n":30,"q":2,"p":29,"hypothesis":"strict","predicted":1,"actual":1,"match":true})");
    CHECK(to_csv_line(hit) == "30,2,29,strict,1,1,true");

    const PredictionRecord miss{6, 3, 2, Hypothesis::none, std::nullopt, 2, false};
    CHECK(to_json_line(miss) ==
          R"({"n":6,"q":3,"p":2,"hypothesis":"none","predicted":"n/a","actual":2,"match":false})");
    CHECK(to_csv_line(miss) == "6,3,2,none,n/a,2,false");

    CHECK(csv_header() == "n,q,p,hypothesis,predicted,actual,match");
}

TEST_CASE("exit codes flag mismatches only in strict mode") {
    VerificationReport report;
    report.mode = VerifyMode::strict;
    report.mismatched = 0;
    CHECK(exit_code_for(report) == 0);
    report.mismatched = 3;
    CHECK(exit_code_for(report) == 2);
    report.mode = VerifyMode::weakened;
    CHECK(exit_code_for(report) == 0);
    report.mode = VerifyMode::both;
    CHECK(exit_code_for(report) == 0);
}

TEST_CASE("mode names round-trip") {
    CHECK(parse_mode("strict") == VerifyMode::strict);
    CHECK(parse_mode("weakened") == VerifyMode::weakened);
    CHECK(parse_mode("both") == VerifyMode::both);
    CHECK_FALSE(parse_mode("lenient").has_value());
    CHECK(std::string(to_string(Hypothesis::weakened)) == "weakened");
}
