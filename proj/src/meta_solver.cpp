#include "minmax/meta_solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "minmax/errors.hpp"
#include "minmax/selection.hpp"

namespace minmax {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// Smallest k with 2^k >= x.
int ceil_log2(std::uint64_t x) { return static_cast<int>(std::bit_width(x - 1)); }

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Sorted: return "sorted";
    case Algorithm::Bisect: return "bisect";
    case Algorithm::Hybrid: return "hybrid";
    case Algorithm::LogStar: return "logstar";
    case Algorithm::Adaptive: return "adaptive";
  }
  return "?";
}

bool algorithm_from_name(const std::string& name, Algorithm& out) {
  for (Algorithm a : {Algorithm::Sorted, Algorithm::Bisect, Algorithm::Hybrid,
                      Algorithm::LogStar, Algorithm::Adaptive}) {
    if (name == algorithm_name(a)) {
      out = a;
      return true;
    }
  }
  return false;
}

SolveReport meta_solve(const OrderedProblem& problem, ComparableStore& store,
                       Algorithm algorithm) {
  const std::size_t n = problem.comparable_count();
  if (n < 1) throw std::invalid_argument("meta_solve: empty instance");
  if (n != store.size())
    throw std::invalid_argument("meta_solve: store size does not match the problem");
  const std::uint64_t m = problem.work_bound();
  if (m < n) throw std::invalid_argument("meta_solve: work_bound must be at least n");

  const auto started = Clock::now();
  const std::uint64_t base = store.comparisons();
  SolveReport report;

  auto metered_solve = [&](const CoarseInstance& coarse) {
    const std::uint64_t before = store.comparisons();
    AnswerOutcome out = problem.ord_solve(coarse);
    report.ord_solve_comparisons += store.comparisons() - before;
    return out;
  };

  std::vector<Pos> order(n);
  std::iota(order.begin(), order.end(), 0);

  if (algorithm == Algorithm::Sorted) {
    detail::sort_inplace(store, order);
    GroupedInterval interval;
    interval.groups.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      interval.groups.push_back(std::span<const Pos>(order).subspan(i, 1));
    const CoarseInstance coarse = coarsen(store, interval);
    report.outcome = metered_solve(coarse);
    report.iterations = 1;
    report.interval_sizes.push_back(static_cast<std::int64_t>(n));
    report.group_counts.push_back(static_cast<std::int64_t>(n));
    report.comparisons = store.comparisons() - base;
    report.elapsed_ms = ms_since(started);
    return report;
  }

  std::size_t lo = 0;
  std::size_t hi = n - 1;
  std::optional<Pos> below_rep;
  std::optional<Pos> above_rep;
  std::optional<AnswerOutcome> final_outcome;

  while (lo < hi) {
    const std::size_t ni = hi - lo + 1;
    ++report.iterations;
    report.interval_sizes.push_back(static_cast<std::int64_t>(ni));

    const int lg = ceil_log2(ni);
    bool refine_fully = false;
    int k = 1;
    switch (algorithm) {
      case Algorithm::Bisect:
        k = 1;
        break;
      case Algorithm::Hybrid:
        // Stop bisecting once sorting the remaining interval is affordable.
        if (static_cast<std::uint64_t>(ni) * static_cast<std::uint64_t>(lg) <= n)
          refine_fully = true;
        break;
      case Algorithm::LogStar: {
        const std::uint64_t i = static_cast<std::uint64_t>(report.iterations);
        const std::uint64_t budget = std::max<std::uint64_t>(
            1, ceil_div(2 * static_cast<std::uint64_t>(n), ni * i * i));
        k = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(lg), budget));
        break;
      }
      case Algorithm::Adaptive: {
        const std::uint64_t budget = std::max<std::uint64_t>(1, ceil_div(m, ni));
        k = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(lg), budget));
        break;
      }
      case Algorithm::Sorted:
        break;  // handled above
    }
    if (!refine_fully && k >= lg) refine_fully = true;

    const std::span<Pos> region(order.data() + lo, ni);
    std::vector<std::size_t> bounds;
    if (refine_fully) {
      detail::sort_inplace(store, region);
      bounds.resize(ni + 1);
      std::iota(bounds.begin(), bounds.end(), std::size_t{0});
      report.group_counts.push_back(static_cast<std::int64_t>(ni));
    } else {
      detail::split_groups_inplace(store, region, std::size_t{1} << k, bounds);
      report.group_counts.push_back(std::int64_t{1} << k);
    }
    const std::size_t group_count = bounds.size() - 1;

    GroupedInterval interval;
    interval.below = std::span<const Pos>(order.data(), lo);
    interval.above = std::span<const Pos>(order.data() + hi + 1, n - hi - 1);
    interval.below_representative = below_rep;
    interval.above_representative = above_rep;
    interval.groups.reserve(group_count);
    for (std::size_t g = 0; g < group_count; ++g)
      interval.groups.push_back(
          std::span<const Pos>(region.data() + bounds[g], bounds[g + 1] - bounds[g]));

    const CoarseInstance coarse = coarsen(store, interval);
    const std::int32_t first_active = interval.below.empty() ? 0 : 1;
    const AnswerOutcome out = metered_solve(coarse);
    const LocatedGroup located =
        locate_group(out, coarse, first_active, static_cast<std::int32_t>(group_count));
    if (located.below_all) {
      final_outcome = AnswerOutcome::below_all();
      break;
    }

    const auto j = static_cast<std::size_t>(located.group);
    // The first time groups fall off an end of the interval, pin the global
    // extreme representative for all later paddings. Group representatives
    // are minima, so the low end reuses the coarse instance's work.
    if (j > 0 && !below_rep) below_rep = coarse.representative[first_active];
    if (j + 1 < group_count && !above_rep)
      above_rep = detail::max_position(store, interval.groups[group_count - 1]);

    hi = lo + bounds[j + 1] - 1;
    lo = lo + bounds[j];
  }

  if (!final_outcome) {
    if (report.iterations == 0) {
      // Single comparable: one trivial refined solve decides between the
      // lone position and the BelowAll sentinel.
      GroupedInterval interval;
      interval.groups.push_back(std::span<const Pos>(order.data(), 1));
      final_outcome = metered_solve(coarsen(store, interval));
    } else {
      final_outcome = AnswerOutcome::answer(order[lo]);
    }
  }

  report.outcome = *final_outcome;
  report.comparisons = store.comparisons() - base;
  report.elapsed_ms = ms_since(started);
  return report;
}

SolveReport solve_sorted(const OrderedProblem& p, ComparableStore& s) {
  return meta_solve(p, s, Algorithm::Sorted);
}
SolveReport solve_bisect(const OrderedProblem& p, ComparableStore& s) {
  return meta_solve(p, s, Algorithm::Bisect);
}
SolveReport solve_hybrid(const OrderedProblem& p, ComparableStore& s) {
  return meta_solve(p, s, Algorithm::Hybrid);
}
SolveReport solve_logstar(const OrderedProblem& p, ComparableStore& s) {
  return meta_solve(p, s, Algorithm::LogStar);
}
SolveReport solve_adaptive(const OrderedProblem& p, ComparableStore& s) {
  return meta_solve(p, s, Algorithm::Adaptive);
}

}  // namespace minmax
