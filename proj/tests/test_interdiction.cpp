#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "minmax/coarse.hpp"
#include "minmax/errors.hpp"
#include "minmax/generators.hpp"
#include "minmax/interdiction.hpp"

using minmax::AnswerOutcome;
using minmax::ComparableStore;
using minmax::InterdictionNetwork;
using minmax::Pos;

namespace {

InterdictionNetwork parallel_pair(std::int32_t source_budget) {
  InterdictionNetwork net;
  net.vertex_count = 2;
  net.source = 0;
  net.sink = 1;
  net.budgets = {source_budget, 0};
  net.arcs.push_back({0, 1, 0});  // capacity 4
  net.arcs.push_back({0, 1, 1});  // capacity 7
  return net;
}

// s -(9)-> a, s -(8)-> b, a -(7)-> t, b -(6)-> t
struct Diamond {
  InterdictionNetwork net;
  std::vector<double> keys{9, 8, 7, 6};
  Diamond() {
    net.vertex_count = 4;
    net.source = 0;
    net.sink = 3;
    net.budgets = {0, 0, 0, 0};
    net.arcs.push_back({0, 1, 0});
    net.arcs.push_back({0, 2, 1});
    net.arcs.push_back({1, 3, 2});
    net.arcs.push_back({2, 3, 3});
  }
};

}  // namespace

TEST_CASE("validate_network flags structural errors") {
  InterdictionNetwork single;
  single.vertex_count = 2;
  single.source = 0;
  single.sink = 1;
  single.arcs.push_back({0, 1, 0});
  CHECK(minmax::validate_network(single, 1).empty());

  InterdictionNetwork same = single;
  same.sink = 0;
  CHECK_FALSE(minmax::validate_network(same, 1).empty());

  InterdictionNetwork negative = single;
  negative.budgets = {-1, 0};
  CHECK_FALSE(minmax::validate_network(negative, 1).empty());

  InterdictionNetwork dangling = single;
  dangling.arcs.push_back({0, 9, 0});
  CHECK_FALSE(minmax::validate_network(dangling, 1).empty());
}

TEST_CASE("ordered_solve_interdiction on hand instances") {
  SUBCASE("two-arc path with no budgets returns the bottleneck") {
    InterdictionNetwork net;
    net.vertex_count = 3;
    net.source = 0;
    net.sink = 2;
    net.budgets = {0, 0, 0};
    net.arcs.push_back({0, 1, 0});  // 4
    net.arcs.push_back({1, 2, 1});  // 7
    ComparableStore store({4.0, 7.0});
    minmax::InterdictionRunLog log;
    const auto out =
        minmax::ordered_solve_interdiction(net, minmax::refined_coarse(store), &log);
    REQUIRE(out.is_answer());
    CHECK(store.key(out.position()) == 4.0);
    CHECK(store.comparisons() == 0);
    for (std::size_t i = 1; i < log.extraction_ranks.size(); ++i)
      CHECK(log.extraction_ranks[i] <= log.extraction_ranks[i - 1]);
  }
  SUBCASE("one removal takes out the wide arc") {
    ComparableStore store({4.0, 7.0});
    const auto out =
        minmax::ordered_solve_interdiction(parallel_pair(1), minmax::refined_coarse(store));
    REQUIRE(out.is_answer());
    CHECK(store.key(out.position()) == 4.0);
  }
  SUBCASE("two removals disconnect") {
    ComparableStore store({4.0, 7.0});
    const auto out =
        minmax::ordered_solve_interdiction(parallel_pair(2), minmax::refined_coarse(store));
    CHECK(out.is_below_all());
  }
}

TEST_CASE("widest_path on hand instances") {
  InterdictionNetwork single;
  single.vertex_count = 2;
  single.source = 0;
  single.sink = 1;
  single.arcs.push_back({0, 1, 0});
  ComparableStore five({5.0});
  CHECK(five.key(minmax::widest_path(single, five).position()) == 5.0);

  InterdictionNetwork path;
  path.vertex_count = 3;
  path.source = 0;
  path.sink = 2;
  path.arcs.push_back({0, 1, 0});
  path.arcs.push_back({1, 2, 1});
  ComparableStore store({4.0, 7.0});
  CHECK(store.key(minmax::widest_path(path, store).position()) == 4.0);

  InterdictionNetwork no_path;
  no_path.vertex_count = 3;
  no_path.source = 0;
  no_path.sink = 2;
  no_path.arcs.push_back({0, 1, 0});
  CHECK(minmax::widest_path(no_path, ComparableStore({4.0})).is_below_all());
}

TEST_CASE("brute force interdiction on hand instances") {
  SUBCASE("parallel arcs") {
    ComparableStore store({4.0, 7.0});
    const auto out = minmax::brute_force_interdiction(parallel_pair(1), store);
    REQUIRE(out.is_answer());
    CHECK(store.key(out.position()) == 4.0);
  }
  SUBCASE("diamond with zero budgets is plain widest path") {
    const Diamond d;
    ComparableStore store(d.keys);
    const auto out = minmax::brute_force_interdiction(d.net, store);
    REQUIRE(out.is_answer());
    CHECK(store.key(out.position()) == 7.0);
  }
  SUBCASE("guard") {
    InterdictionNetwork net;
    net.vertex_count = 2;
    net.source = 0;
    net.sink = 1;
    net.budgets = {20, 0};
    for (Pos a = 0; a < 20; ++a) net.arcs.push_back({0, 1, a});
    ComparableStore store(testutil::random_keys(3, 20));
    CHECK_THROWS_AS(minmax::brute_force_interdiction(net, store, 1000), minmax::GuardError);
  }
}

TEST_CASE("solver equals brute force on small random networks") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    const auto generated =
        minmax::random_network(seed, 2 + seed % 5, 1 + seed % 12, seed % 3, seed % 2 == 0);
    ComparableStore store(generated.keys);
    const auto brute = minmax::brute_force_interdiction(generated.net, store);
    ComparableStore solver_store(generated.keys);
    const auto result =
        minmax::solve_interdiction(generated.net, solver_store, minmax::Algorithm::LogStar);
    CHECK(result.report.outcome == brute);
    CHECK(minmax::verify_interdiction(generated.net, solver_store, result.solution));
    CHECK(result.report.ord_solve_comparisons == 0);
  }
}

TEST_CASE("budget-zero interdiction reduces to widest path") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto generated = minmax::random_network(seed, 2 + seed % 6, 1 + seed % 14, 0, true);
    ComparableStore store(generated.keys);
    const auto wide = minmax::widest_path(generated.net, store);
    ComparableStore solver_store(generated.keys);
    const auto result =
        minmax::solve_interdiction(generated.net, solver_store, minmax::Algorithm::Hybrid);
    CHECK(result.report.outcome == wide);
  }
}

TEST_CASE("a custom downward-closed budget oracle is honored") {
  // Arc 1 (the 7) may never be removed; otherwise the cardinality budget.
  InterdictionNetwork net = parallel_pair(2);
  net.budget_oracle = [&net](Pos vertex, std::span<const Pos> removed, Pos candidate) {
    if (candidate == 1) return false;
    return static_cast<std::int32_t>(removed.size()) < net.budgets[static_cast<std::size_t>(vertex)];
  };
  ComparableStore store({4.0, 7.0});
  const auto brute = minmax::brute_force_interdiction(net, store);
  REQUIRE(brute.is_answer());
  CHECK(store.key(brute.position()) == 7.0);  // only the 4 can go
  const auto ordered =
      minmax::ordered_solve_interdiction(net, minmax::refined_coarse(store));
  CHECK(ordered == brute);
}

TEST_CASE("arc connectivity via blocking flows") {
  const Diamond d;
  const std::vector<char> all(d.net.arcs.size(), 1);
  SUBCASE("no arcs means connectivity zero") {
    const std::vector<char> none(d.net.arcs.size(), 0);
    CHECK(minmax::arc_connectivity_at_most(d.net, none, 0));
  }
  SUBCASE("the diamond carries two disjoint paths") {
    CHECK_FALSE(minmax::arc_connectivity_at_most(d.net, all, 1));
    CHECK(minmax::arc_connectivity_at_most(d.net, all, 2));
  }
  SUBCASE("parallel arcs count separately") {
    const auto net = parallel_pair(0);
    const std::vector<char> both(2, 1);
    CHECK_FALSE(minmax::arc_connectivity_at_most(net, both, 1));
    CHECK(minmax::arc_connectivity_at_most(net, both, 2));
  }
}

TEST_CASE("global-budget interdiction on the diamond") {
  const Diamond d;
  ComparableStore store(d.keys);
  SUBCASE("k=1 leaves width 6") {
    const auto out = minmax::global_solve(d.net, store, 1);
    REQUIRE(out.is_answer());
    CHECK(store.key(out.position()) == 6.0);
    const auto brute = minmax::brute_force_global(d.net, store, 1);
    CHECK(out == brute);
  }
  SUBCASE("k=2 disconnects") {
    CHECK(minmax::global_solve(d.net, store, 2).is_below_all());
    CHECK(minmax::brute_force_global(d.net, store, 2).is_below_all());
  }
  SUBCASE("k=0 is the widest path") {
    CHECK(minmax::global_solve(d.net, store, 0) == minmax::widest_path(d.net, store));
  }
}

TEST_CASE("global solver equals global brute force on random networks") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto generated =
        minmax::random_network(seed + 31, 2 + seed % 5, 1 + seed % 10, 0, seed % 2 == 0);
    ComparableStore store(generated.keys);
    for (std::int32_t k = 0; k <= 2; ++k) {
      const auto fast = minmax::global_solve(generated.net, store, k);
      const auto slow = minmax::brute_force_global(generated.net, store, k);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("width is monotone in the budgets") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto generated = minmax::random_network(seed + 97, 2 + seed % 4, 2 + seed % 8, 1, true);
    ComparableStore store(generated.keys);
    const auto base = minmax::brute_force_interdiction(generated.net, store);

    auto more = generated.net;
    std::mt19937_64 rng(seed);
    more.budgets[rng() % more.budgets.size()] += 1;
    const auto wider = minmax::brute_force_interdiction(more, store);
    // Increasing a budget can only help the interdictor.
    if (base.is_below_all()) {
      CHECK(wider.is_below_all());
    } else if (wider.is_answer()) {
      CHECK(store.key(wider.position()) <= store.key(base.position()));
    }

    const auto g1 = minmax::brute_force_global(generated.net, store, 1);
    const auto g2 = minmax::brute_force_global(generated.net, store, 2);
    if (g1.is_below_all()) {
      CHECK(g2.is_below_all());
    } else if (g2.is_answer()) {
      CHECK(store.key(g2.position()) <= store.key(g1.position()));
    }
  }
}

TEST_CASE("verify_interdiction rejects broken solutions") {
  const auto net = parallel_pair(1);
  ComparableStore store({4.0, 7.0});
  auto result = minmax::solve_interdiction(net, store, minmax::Algorithm::Sorted);
  REQUIRE(minmax::verify_interdiction(net, store, result.solution));

  SUBCASE("budget-violating removal") {
    auto broken = result.solution;
    broken.removed_by_vertex[0] = {0, 1};  // two removals at budget one
    CHECK_FALSE(minmax::verify_interdiction(net, store, broken));
  }
  SUBCASE("claimed answer with a disconnected residual") {
    auto harsher = net;
    harsher.budgets = {2, 0};
    minmax::InterdictionSolution broken;
    broken.width = AnswerOutcome::answer(0);
    broken.removed_by_vertex = {{0, 1}, {}};
    broken.witness_path = std::vector<Pos>{0};
    CHECK_FALSE(minmax::verify_interdiction(harsher, store, broken));
  }
  SUBCASE("wrong witness path") {
    auto broken = result.solution;
    broken.witness_path = std::vector<Pos>{1};  // the removed wide arc
    CHECK_FALSE(minmax::verify_interdiction(net, store, broken));
  }
}

TEST_CASE("solutions come with valid witness paths") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto generated =
        minmax::random_network(seed + 7, 2 + seed % 6, 2 + seed % 9, 1, true);
    ComparableStore store(generated.keys);
    const auto result =
        minmax::solve_interdiction(generated.net, store, minmax::Algorithm::Bisect);
    CHECK(minmax::verify_interdiction(generated.net, store, result.solution));
    if (result.report.outcome.is_answer()) {
      REQUIRE(result.solution.witness_path.has_value());
      CHECK_FALSE(result.solution.witness_path->empty());
    }
  }
}
