#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minmax/comparable_store.hpp"

namespace minmax {

// Outcome of a solver: either the position of the answering comparable, or
// the sentinel for results ranked below every comparable (e.g. an
// interdictor that disconnects source from sink).
class AnswerOutcome {
 public:
  static AnswerOutcome answer(Pos position) { return AnswerOutcome(position); }
  static AnswerOutcome below_all() { return AnswerOutcome(kBelowAll); }

  bool is_answer() const { return pos_ != kBelowAll; }
  bool is_below_all() const { return pos_ == kBelowAll; }
  Pos position() const { return pos_; }

  friend bool operator==(AnswerOutcome a, AnswerOutcome b) { return a.pos_ == b.pos_; }

 private:
  static constexpr Pos kBelowAll = -1;
  explicit AnswerOutcome(Pos p) : pos_(p) {}
  Pos pos_;
};

// Group-wise collapse of a store: every position carries a rank label in
// [0, rank_count), every label is used, and representative[r] is one
// position whose key stands for rank r. Ranks are order-consistent: a lower
// rank's representative key precedes a higher rank's.
struct CoarseInstance {
  std::vector<std::int32_t> rank_of;   // one label per store position
  std::vector<Pos> representative;     // one position per rank
  std::int32_t rank_count() const { return static_cast<std::int32_t>(representative.size()); }
};

// Layout handed to coarsen(): positions below the active interval, the
// order-consistent active groups, and positions above. The optional
// representative hints let a caller that already knows the global extreme
// positions avoid re-scanning the padding each iteration.
struct GroupedInterval {
  std::span<const Pos> below;
  std::vector<std::span<const Pos>> groups;
  std::span<const Pos> above;
  std::optional<Pos> below_representative;
  std::optional<Pos> above_representative;
};

// Builds the coarse instance: the below padding collapses to rank 0
// (represented by the global minimum), each active group to the next rank
// (represented by its minimum position), the above padding to the final
// rank (represented by the global maximum). Empty paddings contribute no
// rank. Representative scans use charged comparisons.
CoarseInstance coarsen(ComparableStore& store, const GroupedInterval& interval);

// Result of mapping an answer back onto the active groups.
struct LocatedGroup {
  bool below_all = false;
  std::int32_t group = -1;  // valid iff !below_all
};

// Maps an ordered-solver outcome to the active group that contains it.
// Ranks [first_active_rank, first_active_rank + active_group_count) are the
// active groups in order; an answer landing in a padding rank is a contract
// violation, because the loop invariant proved the answer lies inside the
// active interval.
LocatedGroup locate_group(const AnswerOutcome& outcome, const CoarseInstance& coarse,
                          std::int32_t first_active_rank, std::int32_t active_group_count);

// Fully refined coarse instance (one rank per position, each representing
// itself), built with the uncharged comparator. For oracles and replays.
CoarseInstance refined_coarse(const ComparableStore& store);

}  // namespace minmax
