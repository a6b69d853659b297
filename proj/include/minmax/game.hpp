#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minmax/coarse.hpp"
#include "minmax/comparable_store.hpp"
#include "minmax/meta_solver.hpp"

namespace minmax {

// Two-player game on a sink-free weighted digraph: from the start node the
// owners alternate picking outgoing arcs forever, and Min pays Max the
// largest arc weight ever traversed. Parallel arcs and self-loops are fine.
struct MaxPayoffGame {
  enum class Owner : std::uint8_t { Min, Max };
  struct Arc {
    Pos tail;
    Pos head;
    Pos weight_pos;  // position of the arc weight in the store
  };

  std::int32_t node_count = 0;
  std::vector<Owner> owners;  // one per node
  std::vector<Arc> arcs;
  Pos start = 0;
};

struct GameSolution {
  AnswerOutcome value = AnswerOutcome::below_all();
  std::vector<Pos> max_strategy;  // arc id per node, -1 on Min nodes
  std::vector<Pos> min_strategy;  // arc id per node, -1 on Max nodes
};

// Structural diagnostics (sinks, dangling references, out-of-range weight
// positions); empty means the game is valid. key_count is the store size.
std::vector<std::string> validate_game(const MaxPayoffGame& game, std::size_t key_count);

// Ordered solver: repeatedly extracts a maximum-rank arc from a bucket
// array; a Min tail with alternatives discards it, otherwise the arc is
// contracted (disjoint-set merge, surviving incoming arcs raised into the
// bucket being drained). Returns the representative position of the rank
// assigned to the start node's super-node. Performs no charged comparisons.
AnswerOutcome ordered_solve_game(const MaxPayoffGame& game, const CoarseInstance& coarse);

// Nodes from which Max can force the play to traverse some arc of
// `target_arcs` (size |E| mask). If `witness_arc` is given it receives, for
// each Max node in the set, the arc that certified membership.
std::vector<char> attractor(const MaxPayoffGame& game, const std::vector<char>& target_arcs,
                            std::vector<Pos>* witness_arc = nullptr);

// Reference oracle: the value is the largest weight t such that Max wins
// the reachability game to the arcs of weight >= t. Uncharged.
AnswerOutcome attractor_value_oracle(const MaxPayoffGame& game, const ComparableStore& store);

// Positional strategies witnessing the value at `value_pos`.
GameSolution extract_strategies(const MaxPayoffGame& game, const ComparableStore& store,
                                Pos value_pos);

// True iff restricting either player to their strategy leaves the oracle
// value unchanged, i.e., each strategy secures the value on its own.
bool verify_strategies(const MaxPayoffGame& game, const ComparableStore& store,
                       const GameSolution& solution);

// Meta-solver plug-in wrapping ordered_solve_game; work bound is |E|.
class GameOrderedProblem : public OrderedProblem {
 public:
  explicit GameOrderedProblem(const MaxPayoffGame& game) : game_(game) {}
  AnswerOutcome ord_solve(const CoarseInstance& coarse) const override {
    return ordered_solve_game(game_, coarse);
  }
  std::size_t comparable_count() const override { return game_.arcs.size(); }
  std::uint64_t work_bound() const override { return game_.arcs.size(); }

 private:
  const MaxPayoffGame& game_;
};

struct GameSolveResult {
  SolveReport report;
  GameSolution solution;
};

// Full pipeline: run the chosen comparison scheme, then extract and attach
// witnessing strategies.
GameSolveResult solve_game(const MaxPayoffGame& game, ComparableStore& store,
                           Algorithm algorithm);

}  // namespace minmax
