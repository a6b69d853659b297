#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minmax/coarse.hpp"
#include "minmax/comparable_store.hpp"
#include "minmax/meta_solver.hpp"

namespace minmax {

// Downward-closed per-vertex feasibility predicate: may one more out-arc be
// removed at `vertex` given the arcs already removed there?
using BudgetOracle =
    std::function<bool(Pos vertex, std::span<const Pos> removed, Pos candidate)>;

// Capacitated digraph with a source, a sink, and per-vertex removal budgets.
// The interdictor removes out-arcs (at most k(v) per vertex under the
// default cardinality budget) to minimize the width of the widest s-t path.
struct InterdictionNetwork {
  struct Arc {
    Pos tail;
    Pos head;
    Pos capacity_pos;  // position of the arc capacity in the store
  };

  std::int32_t vertex_count = 0;
  std::vector<Arc> arcs;
  Pos source = 0;
  Pos sink = 0;
  std::vector<std::int32_t> budgets;  // one per vertex; empty means all zero
  BudgetOracle budget_oracle;         // optional; default is the cardinality budget

  bool may_remove(Pos vertex, std::span<const Pos> removed, Pos candidate) const;
  std::int32_t budget_of(Pos vertex) const {
    return budgets.empty() ? 0 : budgets[static_cast<std::size_t>(vertex)];
  }
};

struct InterdictionSolution {
  AnswerOutcome width = AnswerOutcome::below_all();
  std::vector<std::vector<Pos>> removed_by_vertex;  // arc ids removed at each vertex
  std::optional<std::vector<Pos>> witness_path;     // arc ids of an s-t path of that width
};

// Structural diagnostics; empty means valid.
std::vector<std::string> validate_network(const InterdictionNetwork& net, std::size_t key_count);

// Trace of one ordered solve, used for witness replay and assertions.
struct InterdictionRunLog {
  std::vector<std::int32_t> extraction_ranks;      // non-increasing
  std::vector<std::pair<Pos, Pos>> removals;       // (vertex, arc id), in removal order
};

// Ordered solver: drains a bucket array of the arcs currently entering the
// sink's super-node from the highest rank downward. A tail whose budget
// still allows it removes the arc; otherwise the tail merges into the sink
// and its surviving incoming arcs re-enter the buckets with their rank
// capped at the current extraction rank. Returns the representative of the
// rank at which the source merges, or BelowAll if it never does.
// Performs no charged comparisons.
AnswerOutcome ordered_solve_interdiction(const InterdictionNetwork& net,
                                         const CoarseInstance& coarse,
                                         InterdictionRunLog* log = nullptr);

// Width of the widest s-t path ignoring budgets: binary search over
// capacity ranks with reachability checks. Uncharged.
AnswerOutcome widest_path(const InterdictionNetwork& net, const ComparableStore& store);

// Same, with the masked arcs treated as deleted.
AnswerOutcome widest_path_excluding(const InterdictionNetwork& net, const ComparableStore& store,
                                    const std::vector<char>& removed_arcs);

// Ground truth by enumerating every feasible removal combination; the guard
// bounds the number of combinations.
AnswerOutcome brute_force_interdiction(const InterdictionNetwork& net,
                                       const ComparableStore& store,
                                       std::uint64_t guard = 1'000'000);

// True iff the maximum number of arc-disjoint s-t paths within arc_subset
// is at most k. Unit-capacity blocking-flow phases, stopping as soon as the
// flow exceeds k.
bool arc_connectivity_at_most(const InterdictionNetwork& net,
                              const std::vector<char>& arc_subset, std::int32_t k);

// Global-budget variant: binary search for the smallest capacity rank q
// such that keeping only arcs ranked above q leaves arc connectivity <= k.
// BelowAll when the whole network already has connectivity <= k (the
// interdictor can disconnect outright); per-vertex budgets are ignored.
AnswerOutcome global_solve(const InterdictionNetwork& net, const ComparableStore& store,
                           std::int32_t k);

// Ground truth for the global variant: minimum width over all removal sets
// of at most k arcs. The guard bounds the number of subsets.
AnswerOutcome brute_force_global(const InterdictionNetwork& net, const ComparableStore& store,
                                 std::int32_t k, std::uint64_t guard = 1'000'000);

// Checks budget feasibility of the removals, that the residual widest path
// matches the claimed width, and that the witness path is a real s-t path
// of that width.
bool verify_interdiction(const InterdictionNetwork& net, const ComparableStore& store,
                         const InterdictionSolution& solution);

// Meta-solver plug-in wrapping ordered_solve_interdiction; work bound |E|.
class InterdictionOrderedProblem : public OrderedProblem {
 public:
  explicit InterdictionOrderedProblem(const InterdictionNetwork& net) : net_(net) {}
  AnswerOutcome ord_solve(const CoarseInstance& coarse) const override {
    return ordered_solve_interdiction(net_, coarse);
  }
  std::size_t comparable_count() const override { return net_.arcs.size(); }
  std::uint64_t work_bound() const override { return net_.arcs.size(); }

 private:
  const InterdictionNetwork& net_;
};

struct InterdictionSolveResult {
  SolveReport report;
  InterdictionSolution solution;
};

// Full pipeline: meta-solve, then replay the fully refined run (uncharged)
// to collect the removal set and a witness path.
InterdictionSolveResult solve_interdiction(const InterdictionNetwork& net,
                                           ComparableStore& store, Algorithm algorithm);

namespace detail {

// All feasible removal subsets of the out-arcs of `vertex` (downward-closed
// budget oracle), smallest first; always contains the empty set.
std::vector<std::vector<Pos>> feasible_removals_at(const InterdictionNetwork& net, Pos vertex);

// Invokes fn once per combined feasible removal mask (one subset choice per
// vertex). Throws GuardError if the number of combinations exceeds guard.
void for_each_removal_combination(const InterdictionNetwork& net, std::uint64_t guard,
                                  const std::function<void(const std::vector<char>&)>& fn);

}  // namespace detail

}  // namespace minmax
