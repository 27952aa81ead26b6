// Acceptance battery: runs every built-in verification suite in criterion
// order and prints exactly one PASS/FAIL line per criterion. Exits nonzero
// if any criterion fails (including a blown time budget).

#include "haarpoly/verify.hpp"

#include <cstdio>

int main() {
    bool all_pass = true;
    for (const std::string& name : haarpoly::suite_names()) {
        haarpoly::SuiteResult res = haarpoly::run_suite(name);
        all_pass = all_pass && res.pass;
        std::printf("%s  criterion %2d  %-18s  %7.2fs (limit %5.0fs)  %s\n",
                    res.pass ? "PASS" : "FAIL", res.criterion, res.name.c_str(), res.seconds,
                    res.limit_seconds, res.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
    return all_pass ? 0 : 1;
}
