#include "minmax/selection.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace minmax {
namespace detail {
namespace {

// Charged insertion sort; fine for the 5-element base blocks.
void insertion_sort(ComparableStore& store, std::span<Pos> region) {
  for (std::size_t i = 1; i < region.size(); ++i) {
    Pos x = region[i];
    std::size_t j = i;
    while (j > 0 && store.less(x, region[j - 1])) {
      region[j] = region[j - 1];
      --j;
    }
    region[j] = x;
  }
}

// Lomuto partition around the pivot currently at region[pivot_index].
// Returns the pivot's final index; everything left of it is smaller.
std::size_t partition_around(ComparableStore& store, std::span<Pos> region,
                             std::size_t pivot_index) {
  std::swap(region[pivot_index], region[region.size() - 1]);
  const Pos pivot = region[region.size() - 1];
  std::size_t fill = 0;
  for (std::size_t i = 0; i + 1 < region.size(); ++i) {
    if (store.less(region[i], pivot)) std::swap(region[i], region[fill++]);
  }
  std::swap(region[fill], region[region.size() - 1]);
  return fill;
}

}  // namespace

std::size_t select_rank_inplace(ComparableStore& store, std::span<Pos> region, std::size_t r) {
  std::size_t offset = 0;
  std::span<Pos> span = region;
  while (true) {
    const std::size_t n = span.size();
    if (n <= 5) {
      insertion_sort(store, span);
      return offset + r;
    }
    // Medians of blocks of five, gathered at the front.
    std::size_t medians = 0;
    for (std::size_t start = 0; start < n; start += 5) {
      const std::size_t len = std::min<std::size_t>(5, n - start);
      insertion_sort(store, span.subspan(start, len));
      std::swap(span[medians], span[start + (len - 1) / 2]);
      ++medians;
    }
    const std::size_t mid =
        select_rank_inplace(store, span.first(medians), (medians - 1) / 2);
    const std::size_t p = partition_around(store, span, mid);
    if (r == p) return offset + p;
    if (r < p) {
      span = span.first(p);
    } else {
      offset += p + 1;
      r -= p + 1;
      span = span.subspan(p + 1);
    }
  }
}

void split_groups_inplace(ComparableStore& store, std::span<Pos> region,
                          std::size_t group_count, std::vector<std::size_t>& bounds) {
  struct Rec {
    static void run(ComparableStore& s, std::span<Pos> r, std::size_t g,
                    std::size_t base, std::vector<std::size_t>& out) {
      if (g == 1) {
        out.push_back(base);
        return;
      }
      // Lower median split: the left part receives ceil(n/2) keys.
      const std::size_t left = (r.size() + 1) / 2;
      const std::size_t at = select_rank_inplace(s, r, left - 1);
      const std::size_t p = partition_around(s, r, at);
      if (p != left - 1) throw std::logic_error("split: partition misplaced median");
      run(s, r.first(left), g / 2, base, out);
      run(s, r.subspan(left), g / 2, base + left, out);
    }
  };
  Rec::run(store, region, group_count, 0, bounds);
  bounds.push_back(region.size());
}

void sort_inplace(ComparableStore& store, std::span<Pos> region) {
  std::sort(region.begin(), region.end(),
            [&store](Pos a, Pos b) { return store.less(a, b); });
}

Pos min_position(ComparableStore& store, std::span<const Pos> region) {
  Pos best = region[0];
  for (std::size_t i = 1; i < region.size(); ++i)
    if (store.less(region[i], best)) best = region[i];
  return best;
}

Pos max_position(ComparableStore& store, std::span<const Pos> region) {
  Pos best = region[0];
  for (std::size_t i = 1; i < region.size(); ++i)
    if (store.less(best, region[i])) best = region[i];
  return best;
}

}  // namespace detail

namespace {

void check_subset(const ComparableStore& store, std::span<const Pos> subset) {
  const auto n = static_cast<Pos>(store.size());
  for (Pos p : subset)
    if (p < 0 || p >= n) throw std::invalid_argument("subset position out of range");
}

}  // namespace

Pos select_rank(ComparableStore& store, std::span<const Pos> subset, std::size_t r) {
  check_subset(store, subset);
  if (subset.empty() || r >= subset.size())
    throw std::invalid_argument("select_rank: rank out of range");
  std::vector<Pos> scratch(subset.begin(), subset.end());
  const std::size_t at = detail::select_rank_inplace(store, scratch, r);
  return scratch[at];
}

std::vector<std::vector<Pos>> split_into_groups(ComparableStore& store,
                                                std::span<const Pos> subset,
                                                std::size_t group_count) {
  check_subset(store, subset);
  if (group_count < 1 || group_count > subset.size() ||
      !std::has_single_bit(group_count))
    throw std::invalid_argument("split_into_groups: group count must be a power of two in [1, |subset|]");
  std::vector<Pos> scratch(subset.begin(), subset.end());
  std::vector<std::size_t> bounds;
  detail::split_groups_inplace(store, scratch, group_count, bounds);
  std::vector<std::vector<Pos>> groups;
  groups.reserve(group_count);
  for (std::size_t g = 0; g + 1 < bounds.size(); ++g)
    groups.emplace_back(scratch.begin() + static_cast<std::ptrdiff_t>(bounds[g]),
                        scratch.begin() + static_cast<std::ptrdiff_t>(bounds[g + 1]));
  return groups;
}

Permutation sort_positions(ComparableStore& store, std::span<const Pos> subset) {
  check_subset(store, subset);
  Permutation result(subset.begin(), subset.end());
  detail::sort_inplace(store, result);
  return result;
}

}  // namespace minmax
