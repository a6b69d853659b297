#pragma once

#include <span>
#include <vector>

#include "minmax/comparable_store.hpp"

namespace minmax {

// A (fragment of a) permutation: distinct positions in increasing key order.
using Permutation = std::vector<Pos>;

// Position holding the r-th smallest key (0-based, tie-broken) among subset.
// Deterministic median-of-medians, so charged comparisons are <= C * |subset|
// for a fixed C.
Pos select_rank(ComparableStore& store, std::span<const Pos> subset, std::size_t r);

// Splits subset into `group_count` key-ordered groups (all keys of group j
// precede all keys of group j+1) whose sizes differ by at most one.
// group_count must be a power of two; the split runs log2(group_count)
// rounds of partitioning around lower medians.
std::vector<std::vector<Pos>> split_into_groups(ComparableStore& store,
                                                std::span<const Pos> subset,
                                                std::size_t group_count);

// Subset reordered into strictly increasing tie-broken key order,
// O(|subset| log |subset|) charged comparisons.
Permutation sort_positions(ComparableStore& store, std::span<const Pos> subset);

namespace detail {

// In-place versions operating on a region of a caller-owned permutation
// array. These are what the meta-solver loop uses.

// Rearranges region and returns the index at which the rank-r position now
// sits (region[returned] holds the r-th smallest key).
std::size_t select_rank_inplace(ComparableStore& store, std::span<Pos> region, std::size_t r);

// Partitions region into `group_count` key-ordered groups in place and
// appends the group start offsets (relative to region) plus a final
// region.size() sentinel to `bounds`.
void split_groups_inplace(ComparableStore& store, std::span<Pos> region,
                          std::size_t group_count, std::vector<std::size_t>& bounds);

// Charged comparison sort of a region, strictly increasing order.
void sort_inplace(ComparableStore& store, std::span<Pos> region);

// Position of the smallest / largest key in a non-empty region (charged).
Pos min_position(ComparableStore& store, std::span<const Pos> region);
Pos max_position(ComparableStore& store, std::span<const Pos> region);

}  // namespace detail

}  // namespace minmax
