#pragma once

#include <string>
#include <vector>

namespace minmax {

// Non-negative real stored as exp2 applied `level` times to `v`, so that
// the doubly-exponential growth of the partition recurrences stays
// representable. Canonical form keeps v inside [10, 1024) whenever
// level >= 1. Additions at level >= 1 round down to the larger operand, so
// every derived quantity is a lower bound on the true value; all the lemma
// checks are of the form "x >= bound", which such lower bounds can only
// make harder to pass, never easier.
struct TowerReal {
  int level = 0;
  double v = 0.0;

  static TowerReal from(double x);
  TowerReal log2() const;   // requires value >= 1
  TowerReal exp2() const;
  TowerReal mul(double scalar) const;  // scalar in (0, 2^1000)
  TowerReal add(const TowerReal& other) const;  // exact at level 0, else max

  bool operator>=(const TowerReal& other) const;
  bool operator>(const TowerReal& other) const;

  // Plain double when level == 0, +inf otherwise.
  double to_double() const;
  std::string str() const;
};

struct RecurrenceCheck {
  std::string name;
  bool passed = false;
};

struct RecurrenceReport {
  // Trace of the first recurrence: xs[i-1] holds x_i with x_1 = 1 and
  // x_{i+1} = x_i * 2^(2 x_i / i^2).
  std::vector<TowerReal> xs;
  std::vector<RecurrenceCheck> checks;
  bool all_passed() const;
};

// Iterates both partition recurrences and checks:
//   - x_i >= i^2 log2(i+1) for 4 <= i <= max_i,
//   - log2(x_{i+2}) >= x_i for 4 <= i <= max_i - 2,
//   - the trace is strictly increasing,
//   - for the work-balanced recurrence n_{i+1} = n_i 2^(-m/n_i): per-step
//     growth x_{i+1} >= 2^(x_i m/n) and the iteration count needed to reach
//     n_i <= 1 stays within 2 + log*(m) - log*(m/n).
// 4 <= max_i <= 64. With negative_control set, one bound is deliberately
// corrupted so the failure path can be exercised.
RecurrenceReport check_recurrence_lemmas(int max_i, bool negative_control = false);

// Number of times log2 must be applied to x before it drops to <= 1.
int log_star(double x);

}  // namespace minmax
