#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wproj/vojta.hpp"
#include "wproj_cli/report.hpp"

namespace wproj::cli {

// Runs one command line (without the program name). Structured output goes
// to `out` or the --out file, diagnostics to `err`. Returns the exit code:
// 0 success, 1 domain error, 2 usage or parse error.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Decimal or fraction literal as an exact rational: "0.25", "1/4", "3".
Rational parse_exact(std::string_view text);

// Report for a finished scan; shared with tests that compare worker counts.
Report scan_report(const ScanReport& scan, const Rational& threshold, bool keep_violations_only);

}  // namespace wproj::cli
