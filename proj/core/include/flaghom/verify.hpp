#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flaghom {

struct SuiteResult {
    int checked = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

// Names accepted by run_verify_suite, in documentation order.
std::vector<std::string> verify_suite_names();

// Runs one named fixture suite, writing one line per check to `log`
// (PASS/FAIL plus a diff for failures).  Throws UsageError for an unknown
// suite name.  Never throws on a plain fixture mismatch: those are counted.
SuiteResult run_verify_suite(const std::string& name, std::ostream& log, int threads = 1);

} // namespace flaghom
