#pragma once

#include <string>
#include <vector>

#include "hompois/document.hpp"
#include "hompois/matched.hpp"
#include "hompois/report.hpp"

namespace hompois {

enum class RunStatus { pass, fail, error };

struct RunOptions {
  InvarianceMode mode = InvarianceMode::associative;
  bool allow_r_violation = false;
};

struct RunReport {
  std::string command;
  RunStatus status = RunStatus::pass;
  std::vector<CheckReport> verdicts;
  std::vector<Document> constructed;
  std::vector<std::string> errors;
};

/// Dispatches one CLI command over parsed documents. `action` is "check"
/// or "construct"; kernel precondition failures and input mismatches
/// propagate as exceptions for the caller to map onto exit codes.
/// Construct commands also run the natural check of their output, so a
/// construct report claims a verdict that re-checking the emitted
/// document reproduces.
RunReport run_command(const std::string& action, const std::string& what,
                      const std::vector<Document>& docs,
                      const RunOptions& opts);

/// Deterministic rendering: human-readable lines, a separator, then one
/// line of canonical JSON (the stable machine contract).
std::string render_run_report(const RunReport& report);

/// 0 = pass, 1 = some check failed, 2 = input or usage error,
/// 3 = precondition error.
int exit_code(const RunReport& report);

}  // namespace hompois
