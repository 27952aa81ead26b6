#pragma once

#include <string>
#include <vector>

namespace haarpoly {

/** One built-in verification suite. criterion numbers the acceptance list;
 *  limit_seconds is the wall-clock budget the suite must stay under. */
struct SuiteResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double limit_seconds = 0.0;
    std::string detail; // first failure, or a short success summary
};

/** Names of all suites in criterion order. */
const std::vector<std::string>& suite_names();

/** Run one suite by name (throws IndexError for unknown names). The result
 *  is pass/fail; suites never throw for mathematical failures, only for
 *  environmental ones. pass requires both the checks and the time budget. */
SuiteResult run_suite(const std::string& name);

/** Run every suite in criterion order. */
std::vector<SuiteResult> run_all_suites();

} // namespace haarpoly
