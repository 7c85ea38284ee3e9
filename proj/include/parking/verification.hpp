#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace parking {

enum class Suite { All, Counts, Roundtrip, Lemmas, Oracle, PakStanley };

/// Accepts all|counts|roundtrip|lemmas|oracle|pakstanley.
Suite parse_suite(std::string_view text);

struct CheckResult {
    enum class Status { Pass, Fail, Skip };

    std::string name;
    Status status = Status::Pass;
    std::string expected;
    std::string actual;
    std::string detail;
};

std::string_view to_string(CheckResult::Status status);

/// Runs the named invariant checks for a single n. Checks whose family exceeds its enumeration
/// cap at this n are reported as Skip.
std::vector<CheckResult> run_suite(Suite suite, int n, int jobs = 1);

}  // namespace parking
