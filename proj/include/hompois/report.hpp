#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hompois/rational.hpp"

namespace hompois {

/// Outcome of one axiom check. A failing report carries the
/// lexicographically-first failing basis tuple and the exact residual at
/// that tuple. Composite checks keep their parts in `details` and copy the
/// first failing part's witness upward.
struct CheckReport {
  std::string axiom;
  bool passed = true;
  std::optional<std::vector<std::size_t>> witness;
  std::optional<Vec> residual;
  std::vector<CheckReport> details;
  std::vector<std::string> notes;

  static CheckReport pass(std::string axiom);
  static CheckReport fail(std::string axiom, std::vector<std::size_t> witness,
                          Vec residual);

  /// Conjunction of sub-checks; verdict and witness come from the parts.
  static CheckReport all_of(std::string axiom, std::vector<CheckReport> parts);

  /// Appends a sub-report that is shown but does not affect the verdict.
  void add_informational(CheckReport part);

  /// Deepest first failing leaf, or null when passed.
  const CheckReport* first_failure() const;
};

std::string witness_str(const std::vector<std::size_t>& w);

/// Deterministic plain-text rendering (one line per report node).
std::string render_text(const CheckReport& report, int indent = 0);

}  // namespace hompois
