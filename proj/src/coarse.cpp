#include "minmax/coarse.hpp"

#include <algorithm>
#include <stdexcept>

#include "minmax/errors.hpp"
#include "minmax/selection.hpp"

namespace minmax {

CoarseInstance coarsen(ComparableStore& store, const GroupedInterval& interval) {
  CoarseInstance coarse;
  coarse.rank_of.assign(store.size(), -1);

  auto assign = [&coarse](std::span<const Pos> positions, Pos representative) {
    const auto rank = static_cast<std::int32_t>(coarse.representative.size());
    coarse.representative.push_back(representative);
    for (Pos p : positions) {
      if (coarse.rank_of[static_cast<std::size_t>(p)] != -1)
        throw ContractViolation("coarsen: position appears in two regions");
      coarse.rank_of[static_cast<std::size_t>(p)] = rank;
    }
  };

  if (!interval.below.empty()) {
    const Pos rep = interval.below_representative
                        ? *interval.below_representative
                        : detail::min_position(store, interval.below);
    assign(interval.below, rep);
  }
  for (const auto& group : interval.groups) {
    if (group.empty()) throw ContractViolation("coarsen: empty active group");
    assign(group, detail::min_position(store, group));
  }
  if (!interval.above.empty()) {
    const Pos rep = interval.above_representative
                        ? *interval.above_representative
                        : detail::max_position(store, interval.above);
    assign(interval.above, rep);
  }

  for (std::int32_t r : coarse.rank_of)
    if (r == -1) throw ContractViolation("coarsen: regions do not cover the store");
  return coarse;
}

CoarseInstance refined_coarse(const ComparableStore& store) {
  CoarseInstance coarse;
  coarse.representative.resize(store.size());
  for (std::size_t i = 0; i < store.size(); ++i)
    coarse.representative[i] = static_cast<Pos>(i);
  std::sort(coarse.representative.begin(), coarse.representative.end(),
            [&store](Pos a, Pos b) { return store.less_raw(a, b); });
  coarse.rank_of.resize(store.size());
  for (std::size_t r = 0; r < coarse.representative.size(); ++r)
    coarse.rank_of[static_cast<std::size_t>(coarse.representative[r])] =
        static_cast<std::int32_t>(r);
  return coarse;
}

LocatedGroup locate_group(const AnswerOutcome& outcome, const CoarseInstance& coarse,
                          std::int32_t first_active_rank, std::int32_t active_group_count) {
  if (outcome.is_below_all()) return LocatedGroup{true, -1};
  const Pos p = outcome.position();
  if (p < 0 || static_cast<std::size_t>(p) >= coarse.rank_of.size())
    throw std::invalid_argument("locate_group: answer position out of range");
  const std::int32_t rank = coarse.rank_of[static_cast<std::size_t>(p)];
  if (rank < first_active_rank || rank >= first_active_rank + active_group_count)
    throw ContractViolation("locate_group: answer landed in a padding rank");
  return LocatedGroup{false, rank - first_active_rank};
}

}  // namespace minmax
