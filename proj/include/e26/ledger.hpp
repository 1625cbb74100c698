#pragma once

// The claim ledger: every concrete assertion in E26 as a machine-checkable
// claim, executed against the arithmetic modules. A disagreement with the
// text is a finding, not a failure; two claims (C04, C19) are expected to
// disagree, and the run is judged against that pattern.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "e26/modarith.hpp"

namespace e26 {

enum class ClaimCategory { fermat, mersenne, perfect, theorem, misc };

// How the text commits to the statement.
enum class EulerVerdict { asserted_true, asserted_prime, listed };

enum class Verdict { holds, fails, error };

std::string_view to_string(ClaimCategory c);
std::string_view to_string(Verdict v);

// Named concrete numbers backing an outcome; each one re-verifies with a
// single direct modular computation.
using WitnessList = std::vector<std::pair<std::string, u64>>;

struct CheckResult {
    bool holds = false;
    WitnessList witness;
};

struct Claim {
    std::string id;         // C01..C27
    ClaimCategory category;
    std::string statement;  // verbatim from the text
    std::string check;      // operation + arguments + expected outcome
    EulerVerdict euler_verdict;
    bool expected_agree;    // false for the two known errors
    std::string note;
    std::function<CheckResult()> run;  // executable with no further input
};

struct ClaimOutcome {
    std::string id;
    Verdict computed_verdict = Verdict::error;
    bool agrees_with_paper = false;
    WitnessList witness;
    double elapsed_ms = 0.0;
    std::string error;  // set when computed_verdict == error
};

struct RunSummary {
    int agree = 0;
    int disagree = 0;
    int errors = 0;
};

// The full catalog, ordered by id. Built once.
const std::vector<Claim>& catalog();

// nullptr when no claim has that id.
const Claim* find_claim(std::string_view id);

ClaimOutcome run_claim(const Claim& c);

std::pair<std::vector<ClaimOutcome>, RunSummary> run_all();

// True iff every outcome matches its claim's expected agreement and none
// errored. This is the pass condition for the claims command.
bool matches_expected_pattern(const std::vector<ClaimOutcome>& outcomes);

}  // namespace e26
