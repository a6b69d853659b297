#pragma once

#include <algorithm>
#include <random>
#include <span>
#include <vector>

#include "minmax/comparable_store.hpp"

namespace testutil {

// Uncharged sort oracle: subset positions in increasing tie-broken order.
inline std::vector<minmax::Pos> sorted_oracle(const minmax::ComparableStore& store,
                                              std::span<const minmax::Pos> subset) {
  std::vector<minmax::Pos> out(subset.begin(), subset.end());
  std::sort(out.begin(), out.end(),
            [&store](minmax::Pos a, minmax::Pos b) { return store.less_raw(a, b); });
  return out;
}

inline std::vector<minmax::Pos> all_positions(const minmax::ComparableStore& store) {
  std::vector<minmax::Pos> out(store.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<minmax::Pos>(i);
  return out;
}

inline std::vector<double> random_keys(std::uint64_t seed, std::size_t n,
                                       bool with_duplicates = false) {
  std::mt19937_64 rng(seed);
  std::vector<double> keys;
  keys.reserve(n);
  if (with_duplicates) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n / 2) + 1);
    for (std::size_t i = 0; i < n; ++i) keys.push_back(pick(rng));
  } else {
    std::uniform_real_distribution<double> pick(0.0, 1000.0);
    for (std::size_t i = 0; i < n; ++i) keys.push_back(pick(rng));
  }
  return keys;
}

}  // namespace testutil
