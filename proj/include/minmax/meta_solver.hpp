#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minmax/coarse.hpp"
#include "minmax/comparable_store.hpp"

namespace minmax {

// Plug-in contract for an ordered-version solver. ord_solve consumes only
// the rank labels of a coarse instance and must never touch the charged
// comparator; the engine meters it and reports any charged comparison it
// performs.
class OrderedProblem {
 public:
  virtual ~OrderedProblem() = default;

  // Solves the coarse instance; the answer is a position whose rank equals
  // the rank of the problem's value (or BelowAll).
  virtual AnswerOutcome ord_solve(const CoarseInstance& coarse) const = 0;

  // Number of comparables n of the instance.
  virtual std::size_t comparable_count() const = 0;

  // Work estimate for one ordered solve; must be >= comparable_count().
  // Both graph applications report their arc count here.
  virtual std::uint64_t work_bound() const = 0;
};

enum class Algorithm { Sorted, Bisect, Hybrid, LogStar, Adaptive };

const char* algorithm_name(Algorithm a);
bool algorithm_from_name(const std::string& name, Algorithm& out);

struct SolveReport {
  AnswerOutcome outcome = AnswerOutcome::below_all();
  std::uint64_t comparisons = 0;            // charged comparisons of the session
  std::uint64_t ord_solve_comparisons = 0;  // charged comparisons inside ord_solve (must be 0)
  std::int32_t iterations = 0;
  std::vector<std::int64_t> group_counts;   // groups formed per iteration
  std::vector<std::int64_t> interval_sizes; // active interval size per iteration
  double elapsed_ms = 0.0;
};

// Runs the chosen comparison scheme on top of the plug-in:
//   Sorted   - sort everything, one fully refined ord_solve.
//   Bisect   - median split into two groups per iteration.
//   Hybrid   - bisect until sorting the remaining interval is affordable
//              (n_i * ceil(log2 n_i) <= n), then one sorted finish.
//   LogStar  - 2^k_i groups with k_i = min(ceil(log2 n_i), max(1, ceil(2n/(n_i i^2)))),
//              linear total comparisons, ~log* n iterations.
//   Adaptive - k_i = min(ceil(log2 n_i), max(1, ceil(m/n_i))) with
//              m = work_bound(), balancing partitioning against solving.
SolveReport meta_solve(const OrderedProblem& problem, ComparableStore& store, Algorithm algorithm);

SolveReport solve_sorted(const OrderedProblem& problem, ComparableStore& store);
SolveReport solve_bisect(const OrderedProblem& problem, ComparableStore& store);
SolveReport solve_hybrid(const OrderedProblem& problem, ComparableStore& store);
SolveReport solve_logstar(const OrderedProblem& problem, ComparableStore& store);
SolveReport solve_adaptive(const OrderedProblem& problem, ComparableStore& store);

}  // namespace minmax
