#pragma once

#include <string>
#include <vector>

namespace cpn {

/// One verification check: a stable id, the mathematical identity it
/// certifies, a pass/fail/skipped status with an optional serialized
/// witness, and wall time. `expected_fail` marks checks that demonstrate a
/// negative result: a recorded failure there is the point, not a bug.
struct CheckResult {
    std::string id;
    std::string ref;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string witness;
    bool expected_fail = false;
    double seconds = 0.0;
};

struct SuiteConfig {
    int n = 2;
    std::string suite = "all";  // all | calculus | connection | cochain | holomorphic
    int slack = 2;
    int max_uni_degree = 2;
    std::string calculus = "dbar";        // cochain suite: "dbar" or "d"
    std::string module_spec = "fundamental";  // fundamental | sum | json:<text>
    unsigned seed = 2026;
};

struct SuiteReport {
    std::string schema = "cpn-verify-report/1";
    SuiteConfig config;
    std::vector<CheckResult> checks;  // sorted by id

    /// True iff no check recorded an unexpected failure or skip.
    bool ok() const;
    /// True iff some check failed (expected or not); drives the exit code
    /// of negative-result suites.
    bool any_failure() const;
};

/// Runs the configured checks. Resource-cap overruns surface as
/// skipped-with-reason checks, never as wrong answers.
SuiteReport run_suite(const SuiteConfig& config);

std::string report_to_json(const SuiteReport& report);
SuiteReport report_from_json(const std::string& text);

}  // namespace cpn
