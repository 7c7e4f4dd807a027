#pragma once

#include <string>
#include <vector>

#include "ttl/cli/report.hpp"

namespace ttl::cli {

/// Re-checks every embedded certificate with exact primitives, then
/// recomputes the report from its inputs and compares. Empty when accepted.
std::vector<std::string> verify_report_json(const Json& report);

/// The report emitted by `ttl verify`.
Report verification_report(const Json& report, const std::string& source);

}  // namespace ttl::cli
