#include "minmax/comparable_store.hpp"

#include <stdexcept>
#include <string>

namespace minmax {

Ordering ComparableStore::compare(Pos i, Pos j) {
  const auto n = static_cast<Pos>(keys_.size());
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("compare: position out of range");
  if (i == j) throw std::invalid_argument("compare: positions must be distinct");
  ++comparisons_;
  return less_raw(i, j) ? Ordering::Less : Ordering::Greater;
}

}  // namespace minmax
