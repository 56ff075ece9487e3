#pragma once

#include <set>
#include <string>
#include <vector>

namespace kfib {

/// Scope and tolerances for the cross-check suites.
struct VerifyConfig {
    long k_max = 6;
    long n_abs_max = 150;
    double tol = 1e-9;
    long property_cases = 2000;
    int jobs = 1;
    std::set<std::string> suites;  // empty = all
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    long checked = 0;   // instances examined
    std::string detail;  // first failure, or a summary
};

struct VerifyReport {
    std::vector<CheckResult> results;
    bool all_pass = true;
};

/// The registered suite names, in report order.
const std::vector<std::string>& all_suite_names();

/// Runs the selected suites (all when the set is empty) in a parallel
/// task pool; the report order is fixed regardless of job count.
VerifyReport run_verify(const VerifyConfig& cfg);

/// Plain-text report, one line per check. Deterministic bytes: no
/// timings, no addresses.
std::string render_report(const VerifyReport& report);

/// JSON report with the same content.
std::string render_report_json(const VerifyReport& report);

}  // namespace kfib
