#include <doctest.h>

#include "helpers.hpp"
#include "minmax/coarse.hpp"
#include "minmax/errors.hpp"

using minmax::AnswerOutcome;
using minmax::CoarseInstance;
using minmax::ComparableStore;
using minmax::GroupedInterval;
using minmax::Pos;

namespace {

std::span<const Pos> span_of(const std::vector<Pos>& v) { return {v.data(), v.size()}; }

}  // namespace

TEST_CASE("coarsen with a single all-covering group") {
  ComparableStore store({4.0, 8.0, 1.0, 6.0});
  const std::vector<Pos> all{0, 1, 2, 3};
  GroupedInterval interval;
  interval.groups.push_back(span_of(all));
  const CoarseInstance coarse = minmax::coarsen(store, interval);
  CHECK(coarse.rank_count() == 1);
  CHECK(coarse.representative == std::vector<Pos>{2});  // the key 1
  CHECK(coarse.rank_of == std::vector<std::int32_t>{0, 0, 0, 0});
}

TEST_CASE("coarsen assigns padding and group ranks in order") {
  ComparableStore store({4.0, 8.0, 1.0, 6.0});
  const std::vector<Pos> below{2}, g0{0}, g1{3}, above{1};
  GroupedInterval interval;
  interval.below = span_of(below);
  interval.groups.push_back(span_of(g0));
  interval.groups.push_back(span_of(g1));
  interval.above = span_of(above);
  const CoarseInstance coarse = minmax::coarsen(store, interval);
  CHECK(coarse.rank_count() == 4);
  CHECK(coarse.representative == std::vector<Pos>{2, 0, 3, 1});
  CHECK(coarse.rank_of == std::vector<std::int32_t>{1, 3, 0, 2});
}

TEST_CASE("coarsen without padding uses only group ranks") {
  ComparableStore store({4.0, 8.0});
  const std::vector<Pos> g0{0}, g1{1};
  GroupedInterval interval;
  interval.groups.push_back(span_of(g0));
  interval.groups.push_back(span_of(g1));
  const CoarseInstance coarse = minmax::coarsen(store, interval);
  CHECK(coarse.rank_count() == 2);
}

TEST_CASE("coarsen rejects inconsistent coverage") {
  ComparableStore store({4.0, 8.0, 1.0});
  const std::vector<Pos> partial{0, 1};
  GroupedInterval missing;
  missing.groups.push_back(span_of(partial));
  CHECK_THROWS_AS(minmax::coarsen(store, missing), minmax::ContractViolation);

  const std::vector<Pos> dup{0, 0, 1, 2};
  GroupedInterval twice;
  twice.groups.push_back(span_of(dup));
  CHECK_THROWS_AS(minmax::coarsen(store, twice), minmax::ContractViolation);
}

TEST_CASE("locate_group maps answers to active groups") {
  CoarseInstance coarse;
  coarse.rank_of = {0, 1, 1, 2};
  coarse.representative = {0, 1, 3};

  SUBCASE("an answered rank maps to its group") {
    const auto located = minmax::locate_group(AnswerOutcome::answer(2), coarse, 1, 2);
    CHECK_FALSE(located.below_all);
    CHECK(located.group == 0);
  }
  SUBCASE("BelowAll passes through") {
    const auto located = minmax::locate_group(AnswerOutcome::below_all(), coarse, 1, 2);
    CHECK(located.below_all);
  }
  SUBCASE("padding ranks are contract violations") {
    CHECK_THROWS_AS(minmax::locate_group(AnswerOutcome::answer(0), coarse, 1, 2),
                    minmax::ContractViolation);
  }
}

TEST_CASE("refined_coarse ranks every position by the tie-broken order") {
  ComparableStore store({4.0, 1.0, 4.0});
  const CoarseInstance coarse = minmax::refined_coarse(store);
  CHECK(coarse.rank_count() == 3);
  CHECK(coarse.rank_of == std::vector<std::int32_t>{1, 0, 2});
  CHECK(coarse.representative == std::vector<Pos>{1, 0, 2});
  CHECK(store.comparisons() == 0);
}
