#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "minmax/circuit.hpp"
#include "minmax/errors.hpp"
#include "minmax/game.hpp"
#include "minmax/generators.hpp"
#include "minmax/interdiction.hpp"
#include "minmax/meta_solver.hpp"

using minmax::Algorithm;
using minmax::AnswerOutcome;
using minmax::CoarseInstance;
using minmax::ComparableStore;
using minmax::Pos;
using minmax::SolveReport;

namespace {

// Toy ordered problem: the k-th smallest comparable. A continuous order
// statistic with an easy independent oracle, exercising nontrivial group
// location on coarse instances.
class KthSmallestProblem : public minmax::OrderedProblem {
 public:
  KthSmallestProblem(std::size_t n, std::size_t k, std::uint64_t xi = 0)
      : n_(n), k_(k), xi_(std::max<std::uint64_t>(n, xi)) {}

  AnswerOutcome ord_solve(const CoarseInstance& coarse) const override {
    std::vector<std::size_t> count(static_cast<std::size_t>(coarse.rank_count()), 0);
    for (std::int32_t r : coarse.rank_of) ++count[static_cast<std::size_t>(r)];
    std::size_t seen = 0;
    for (std::size_t r = 0; r < count.size(); ++r) {
      seen += count[r];
      if (seen > k_) return AnswerOutcome::answer(coarse.representative[r]);
    }
    throw minmax::ContractViolation("kth: rank counts do not cover k");
  }
  std::size_t comparable_count() const override { return n_; }
  std::uint64_t work_bound() const override { return xi_; }

 private:
  std::size_t n_, k_;
  std::uint64_t xi_;
};

Pos kth_oracle(const ComparableStore& store, std::size_t k) {
  std::vector<Pos> all(store.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Pos>(i);
  return testutil::sorted_oracle(store, all)[k];
}

void check_report_invariants(const SolveReport& report) {
  CHECK(report.ord_solve_comparisons == 0);
  CHECK(report.iterations == static_cast<std::int32_t>(report.interval_sizes.size()));
  for (std::size_t i = 1; i < report.interval_sizes.size(); ++i) {
    CHECK(report.interval_sizes[i] < report.interval_sizes[i - 1]);
    // Direct consequence of grouping: the located group is at most a
    // group_count-th of the interval, plus one for uneven splits.
    CHECK(report.interval_sizes[i] <=
          report.interval_sizes[i - 1] / report.group_counts[i - 1] + 1);
  }
}

}  // namespace

TEST_CASE("all schemes find the k-th smallest on random stores") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 60;
    const std::size_t k = seed % n;
    const KthSmallestProblem problem(n, k);
    const Pos expected = [&] {
      ComparableStore store(testutil::random_keys(seed, n, seed % 4 == 0));
      return kth_oracle(store, k);
    }();
    for (Algorithm algorithm :
         {Algorithm::Sorted, Algorithm::Bisect, Algorithm::Hybrid, Algorithm::LogStar,
          Algorithm::Adaptive}) {
      ComparableStore store(testutil::random_keys(seed, n, seed % 4 == 0));
      const SolveReport report = minmax::meta_solve(problem, store, algorithm);
      REQUIRE(report.outcome.is_answer());
      CHECK(report.outcome.position() == expected);
      CHECK(report.comparisons == store.comparisons());
      check_report_invariants(report);
    }
  }
}

TEST_CASE("single comparable solves in zero loop iterations") {
  const KthSmallestProblem problem(1, 0);
  for (Algorithm algorithm : {Algorithm::Bisect, Algorithm::Hybrid, Algorithm::LogStar,
                              Algorithm::Adaptive}) {
    ComparableStore store({5.0});
    const SolveReport report = minmax::meta_solve(problem, store, algorithm);
    CHECK(report.outcome == AnswerOutcome::answer(0));
    CHECK(report.iterations == 0);
  }
  ComparableStore store({5.0});
  const SolveReport report = minmax::solve_sorted(problem, store);
  CHECK(report.outcome == AnswerOutcome::answer(0));
  CHECK(report.iterations == 1);
}

TEST_CASE("a single-comparable BelowAll instance short-circuits every scheme") {
  // One arc, removable: the interdictor disconnects, even though the loop
  // body never runs.
  minmax::InterdictionNetwork net;
  net.vertex_count = 2;
  net.source = 0;
  net.sink = 1;
  net.budgets = {1, 0};
  net.arcs.push_back({0, 1, 0});
  const minmax::InterdictionOrderedProblem problem(net);
  for (Algorithm algorithm :
       {Algorithm::Sorted, Algorithm::Bisect, Algorithm::Hybrid, Algorithm::LogStar,
        Algorithm::Adaptive}) {
    ComparableStore store({5.0});
    const SolveReport report = minmax::meta_solve(problem, store, algorithm);
    CHECK(report.outcome.is_below_all());
  }
}

TEST_CASE("bisect iteration count stays within the halving bound") {
  for (const std::size_t n : {1UL, 2UL, 8UL, 100UL, 1000UL}) {
    const KthSmallestProblem problem(n, n / 2);
    ComparableStore store(testutil::random_keys(7, n));
    const SolveReport report = minmax::solve_bisect(problem, store);
    const int bound = static_cast<int>(std::ceil(std::log2(std::max<double>(2, n)))) + 1;
    CHECK(report.iterations <= bound);
    check_report_invariants(report);
  }
}

TEST_CASE("hybrid stops early and sorts") {
  SUBCASE("two comparables sort immediately") {
    const KthSmallestProblem problem(2, 1);
    ComparableStore store({9.0, 3.0});
    const SolveReport report = minmax::solve_hybrid(problem, store);
    CHECK(report.iterations == 1);
    CHECK(report.outcome == AnswerOutcome::answer(0));
  }
  SUBCASE("iterations are doubly logarithmic") {
    for (const std::size_t n : {1000UL, 100000UL, 1000000UL}) {
      const KthSmallestProblem problem(n, n / 3);
      ComparableStore store(testutil::random_keys(11, n));
      const SolveReport report = minmax::solve_hybrid(problem, store);
      const int bound =
          2 * static_cast<int>(std::ceil(std::log2(std::log2(static_cast<double>(n))))) + 2;
      CHECK(report.iterations <= bound);
    }
  }
}

TEST_CASE("logstar iterations and comparisons stay small") {
  for (const std::size_t n : {1000UL, 100000UL, 1000000UL}) {
    const KthSmallestProblem problem(n, 2 * n / 3);
    ComparableStore store(testutil::random_keys(13, n));
    const SolveReport report = minmax::solve_logstar(problem, store);
    CHECK(report.iterations <= 8);
    check_report_invariants(report);
  }
}

TEST_CASE("adaptive with a generous work bound refines fully at once") {
  const std::size_t n = 4096;
  const auto xi = static_cast<std::uint64_t>(n) * 12;  // >= n log2 n
  const KthSmallestProblem problem(n, n / 2, xi);
  ComparableStore store(testutil::random_keys(17, n));
  const SolveReport report = minmax::solve_adaptive(problem, store);
  CHECK(report.iterations == 1);
  CHECK(report.group_counts == std::vector<std::int64_t>{static_cast<std::int64_t>(n)});
}

TEST_CASE("adaptive with the minimum work bound starts with one median split") {
  const std::size_t n = 4096;
  const KthSmallestProblem problem(n, n / 2, n);
  ComparableStore store(testutil::random_keys(19, n));
  const SolveReport report = minmax::solve_adaptive(problem, store);
  CHECK(report.group_counts.front() == 2);
  check_report_invariants(report);
}

TEST_CASE("meta-solver value agreement across schemes and plug-ins") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto generated_game = minmax::random_game(seed, 2 + seed % 6, 4 + seed % 12);
    const minmax::GameOrderedProblem game_problem(generated_game.game);
    ComparableStore sorted_store(generated_game.keys);
    const auto baseline = minmax::solve_sorted(game_problem, sorted_store);
    for (Algorithm algorithm :
         {Algorithm::Bisect, Algorithm::Hybrid, Algorithm::LogStar, Algorithm::Adaptive}) {
      ComparableStore store(generated_game.keys);
      const SolveReport report = minmax::meta_solve(game_problem, store, algorithm);
      CHECK(report.outcome == baseline.outcome);
      check_report_invariants(report);
    }

    const auto generated_net =
        minmax::random_network(seed + 500, 2 + seed % 5, 3 + seed % 10, 2, seed % 2 == 0);
    const minmax::InterdictionOrderedProblem net_problem(generated_net.net);
    ComparableStore net_sorted(generated_net.keys);
    const auto net_baseline = minmax::solve_sorted(net_problem, net_sorted);
    for (Algorithm algorithm :
         {Algorithm::Bisect, Algorithm::Hybrid, Algorithm::LogStar, Algorithm::Adaptive}) {
      ComparableStore store(generated_net.keys);
      const SolveReport report = minmax::meta_solve(net_problem, store, algorithm);
      CHECK(report.outcome == net_baseline.outcome);
      check_report_invariants(report);
    }
  }
}

TEST_CASE("solve_sorted commutes with monotone collapses of the keys") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 2 + seed % 20;
    const std::size_t k = seed % n;
    const KthSmallestProblem problem(n, k);
    const auto keys = testutil::random_keys(seed * 3 + 1, n);

    ComparableStore plain(keys);
    const SolveReport base = minmax::solve_sorted(problem, plain);
    const double base_key = plain.key(base.outcome.position());

    // Non-decreasing collapse applied to the raw keys.
    auto sorted_keys = keys;
    std::sort(sorted_keys.begin(), sorted_keys.end());
    const auto map = minmax::random_monotone_map(seed, n);
    auto image = [&](double x) {
      const auto rank = static_cast<std::size_t>(
          std::lower_bound(sorted_keys.begin(), sorted_keys.end(), x) - sorted_keys.begin());
      return map.table[rank];
    };
    std::vector<double> collapsed;
    for (double x : keys) collapsed.push_back(image(x));

    ComparableStore mapped(collapsed);
    const SolveReport mapped_report = minmax::solve_sorted(problem, mapped);
    CHECK(mapped.key(mapped_report.outcome.position()) == image(base_key));
  }
}

TEST_CASE("meta_solve validates its inputs") {
  const KthSmallestProblem problem(3, 1);
  ComparableStore wrong_size({1.0, 2.0});
  CHECK_THROWS_AS(minmax::solve_bisect(problem, wrong_size), std::invalid_argument);
}
