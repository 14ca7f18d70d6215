#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hompois/rational.hpp"
#include "hompois/report.hpp"

namespace hompois {

/// Number of workers used by exhaustive basis scans. All values are
/// immutable during a scan and results are merged by minimum tuple, so the
/// outcome is identical for every worker count.
void set_worker_count(unsigned n);
unsigned worker_count();

using ResidualFn = std::function<Vec(const std::vector<std::size_t>&)>;

/// Evaluates `residual` on every index tuple in the box given by `bounds`
/// (row-major lexicographic order) and reports the first tuple with a
/// nonzero residual. An empty box passes vacuously.
CheckReport exhaustive_check(std::string axiom,
                             std::vector<std::size_t> bounds,
                             const ResidualFn& residual);

}  // namespace hompois
