#include "hompois/parallel.hpp"

#include <atomic>
#include <limits>
#include <thread>

namespace hompois {

namespace {

std::atomic<unsigned> g_workers{1};

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> decode(std::size_t flat,
                                const std::vector<std::size_t>& bounds) {
  std::vector<std::size_t> tuple(bounds.size(), 0);
  for (std::size_t d = bounds.size(); d-- > 0;) {
    tuple[d] = flat % bounds[d];
    flat /= bounds[d];
  }
  return tuple;
}

}  // namespace

void set_worker_count(unsigned n) { g_workers.store(n == 0 ? 1 : n); }

unsigned worker_count() { return g_workers.load(); }

CheckReport exhaustive_check(std::string axiom,
                             std::vector<std::size_t> bounds,
                             const ResidualFn& residual) {
  std::size_t total = 1;
  for (std::size_t b : bounds) total *= b;
  if (total == 0) return CheckReport::pass(std::move(axiom));

  const auto scan_range = [&](std::size_t lo, std::size_t hi) -> std::size_t {
    for (std::size_t t = lo; t < hi; ++t) {
      if (!is_zero(residual(decode(t, bounds)))) return t;
    }
    return npos;
  };

  std::size_t first = npos;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), total));
  if (workers <= 1) {
    first = scan_range(0, total);
  } else {
    std::vector<std::size_t> local(workers, npos);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = std::min<std::size_t>(w * chunk, total);
      const std::size_t hi = std::min<std::size_t>(lo + chunk, total);
      pool.emplace_back([&, w, lo, hi] { local[w] = scan_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (std::size_t cand : local) first = std::min(first, cand);
  }

  if (first == npos) return CheckReport::pass(std::move(axiom));
  auto tuple = decode(first, bounds);
  Vec res = residual(tuple);
  return CheckReport::fail(std::move(axiom), std::move(tuple), std::move(res));
}

}  // namespace hompois
