#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace minmax {

// Index of a comparable inside a store. Positions are 0-based everywhere.
using Pos = std::int32_t;

enum class Ordering { Less, Greater };

// The list of n totally ordered keys of one problem instance, together with
// the counter that meters every charged comparison. Duplicate raw keys are
// tie-broken by position, so the induced order is strictly total and every
// algorithm works on arbitrary inputs.
//
// Solvers must only look at keys through compare()/less(); the raw accessors
// key() and less_raw() exist for oracles, baselines and report printing,
// which are never charged.
class ComparableStore {
 public:
  explicit ComparableStore(std::vector<double> keys) : keys_(std::move(keys)) {}

  std::size_t size() const { return keys_.size(); }
  double key(Pos i) const { return keys_[static_cast<std::size_t>(i)]; }

  // Charged comparison of two distinct positions. Increments the counter by
  // exactly 1 and returns the tie-broken order.
  Ordering compare(Pos i, Pos j);

  // compare() == Less, as a predicate.
  bool less(Pos i, Pos j) { return compare(i, j) == Ordering::Less; }

  // Uncharged tie-broken order, for oracles and test baselines only.
  bool less_raw(Pos i, Pos j) const {
    return keys_[static_cast<std::size_t>(i)] < keys_[static_cast<std::size_t>(j)] ||
           (keys_[static_cast<std::size_t>(i)] == keys_[static_cast<std::size_t>(j)] && i < j);
  }

  std::uint64_t comparisons() const { return comparisons_; }
  void reset_comparisons() { comparisons_ = 0; }

 private:
  std::vector<double> keys_;
  std::uint64_t comparisons_ = 0;
};

}  // namespace minmax
