#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stepgcd/prediction.hpp"

namespace stepgcd {

enum class Hypothesis { strict, weakened, none };
enum class VerifyMode { strict, weakened, both };

const char* to_string(Hypothesis h);
const char* to_string(VerifyMode m);
std::optional<VerifyMode> parse_mode(std::string_view s);

// One grid cell: the prediction, when a hypothesis applied, next to the
// carry-counting valuation of the family GCD.
struct PredictionRecord {
    std::uint64_t n;
    std::uint64_t q;
    std::uint64_t p;
    Hypothesis hypothesis;
    std::optional<unsigned> predicted;  // nullopt when no hypothesis applies
    unsigned actual;
    bool match;
};

struct VerificationReport {
    std::uint64_t n_max = 0;
    std::uint64_t q_max = 0;
    VerifyMode mode = VerifyMode::strict;
    std::uint64_t exact_oracle_limit = 0;
    std::uint64_t checked = 0;
    std::uint64_t matched = 0;
    std::uint64_t mismatched = 0;
    std::uint64_t not_applicable = 0;
    std::uint64_t oracle_checked = 0;
    std::uint64_t oracle_failures = 0;
    std::vector<PredictionRecord> records;  // ascending (n, q, p)
    double wall_seconds = 0.0;

    std::vector<PredictionRecord> mismatches() const;
};

// Sweeps 3 <= n <= n_max, 1 <= q <= min(q_max, n-1) and every prime
// p <= n. Each triple is recorded; the mode picks which hypothesis
// classifies it. For n <= exact_oracle_limit every recorded valuation is
// cross-checked against the big-integer GCD, per prime and as a full
// product. Workers split the n axis; record order is (n, q, p)
// regardless of jobs.
VerificationReport verify_grid(std::uint64_t n_max, std::uint64_t q_max, VerifyMode mode,
                               std::uint64_t exact_oracle_limit, unsigned jobs = 1);

std::string to_json_line(const PredictionRecord& r);
std::string csv_header();
std::string to_csv_line(const PredictionRecord& r);

void write_json(std::ostream& out, const VerificationReport& report);
void write_csv(std::ostream& out, const VerificationReport& report);
void write_summary(std::ostream& out, const VerificationReport& report);

// 2 when strict-mode mismatches exist, else 0.
int exit_code_for(const VerificationReport& report);

}  // namespace stepgcd
