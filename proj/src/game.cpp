#include "minmax/game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "minmax/errors.hpp"

namespace minmax {

namespace {

using Owner = MaxPayoffGame::Owner;

std::vector<std::vector<Pos>> incoming_lists(const MaxPayoffGame& game) {
  std::vector<std::vector<Pos>> in(static_cast<std::size_t>(game.node_count));
  for (std::size_t a = 0; a < game.arcs.size(); ++a)
    in[static_cast<std::size_t>(game.arcs[a].head)].push_back(static_cast<Pos>(a));
  return in;
}

}  // namespace

std::vector<std::string> validate_game(const MaxPayoffGame& game, std::size_t key_count) {
  std::vector<std::string> issues;
  if (game.node_count < 1) issues.push_back("game has no nodes");
  if (game.owners.size() != static_cast<std::size_t>(game.node_count))
    issues.push_back("owner list does not match the node count");
  if (game.start < 0 || game.start >= game.node_count)
    issues.push_back("start node out of range");
  std::vector<std::int32_t> outdeg(static_cast<std::size_t>(std::max(game.node_count, 1)), 0);
  for (std::size_t a = 0; a < game.arcs.size(); ++a) {
    const auto& arc = game.arcs[a];
    if (arc.tail < 0 || arc.tail >= game.node_count || arc.head < 0 ||
        arc.head >= game.node_count) {
      issues.push_back("arc " + std::to_string(a) + " references a missing node");
      continue;
    }
    if (arc.weight_pos < 0 || static_cast<std::size_t>(arc.weight_pos) >= key_count)
      issues.push_back("arc " + std::to_string(a) + " has an out-of-range weight position");
    ++outdeg[static_cast<std::size_t>(arc.tail)];
  }
  for (Pos v = 0; v < game.node_count; ++v)
    if (outdeg[static_cast<std::size_t>(v)] == 0)
      issues.push_back("node " + std::to_string(v) + " is a sink");
  return issues;
}

AnswerOutcome ordered_solve_game(const MaxPayoffGame& game, const CoarseInstance& coarse) {
  const auto node_count = static_cast<std::size_t>(game.node_count);
  const std::size_t arc_count = game.arcs.size();
  if (node_count == 0 || arc_count == 0)
    throw std::invalid_argument("ordered_solve_game: empty game");
  for (const auto& arc : game.arcs)
    if (arc.weight_pos < 0 || static_cast<std::size_t>(arc.weight_pos) >= coarse.rank_of.size())
      throw std::invalid_argument("ordered_solve_game: weight position outside the coarse instance");

  const auto rank_count = static_cast<std::size_t>(coarse.rank_count());

  // Disjoint-set over nodes; the root carries the super-node state.
  std::vector<Pos> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::int32_t> set_size(node_count, 1);
  auto find = [&parent](Pos x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  std::vector<Owner> owner(game.owners);
  std::vector<std::int32_t> outdeg(node_count, 0);

  // Intrusive singly-linked arc lists per super-node.
  constexpr Pos kNil = -1;
  std::vector<Pos> in_head(node_count, kNil), in_last(node_count, kNil);
  std::vector<Pos> out_head(node_count, kNil), out_last(node_count, kNil);
  std::vector<Pos> next_in(arc_count, kNil), next_out(arc_count, kNil);
  auto append = [kNil](std::vector<Pos>& head, std::vector<Pos>& last, std::vector<Pos>& next,
                       Pos node, Pos arc) {
    if (head[static_cast<std::size_t>(node)] == kNil) {
      head[static_cast<std::size_t>(node)] = arc;
    } else {
      next[static_cast<std::size_t>(last[static_cast<std::size_t>(node)])] = arc;
    }
    last[static_cast<std::size_t>(node)] = arc;
  };

  std::vector<std::int32_t> cur_rank(arc_count);
  std::vector<char> removed(arc_count, 0);
  std::vector<std::vector<Pos>> buckets(rank_count);

  for (std::size_t a = 0; a < arc_count; ++a) {
    const auto& arc = game.arcs[a];
    cur_rank[a] = coarse.rank_of[static_cast<std::size_t>(arc.weight_pos)];
    buckets[static_cast<std::size_t>(cur_rank[a])].push_back(static_cast<Pos>(a));
    append(out_head, out_last, next_out, arc.tail, static_cast<Pos>(a));
    append(in_head, in_last, next_in, arc.head, static_cast<Pos>(a));
    ++outdeg[static_cast<std::size_t>(arc.tail)];
  }

  for (std::size_t r_plus = rank_count; r_plus-- > 0;) {
    const auto r = static_cast<std::int32_t>(r_plus);
    auto& bucket = buckets[r_plus];
    for (std::size_t c = 0; c < bucket.size(); ++c) {  // grows while draining
      const Pos e = bucket[c];
      const auto ei = static_cast<std::size_t>(e);
      if (removed[ei] || cur_rank[ei] != r) continue;
      const Pos vt = find(game.arcs[ei].tail);
      const Pos vh = find(game.arcs[ei].head);

      if (owner[static_cast<std::size_t>(vt)] == Owner::Min &&
          outdeg[static_cast<std::size_t>(vt)] >= 2) {
        removed[ei] = 1;
        --outdeg[static_cast<std::size_t>(vt)];
        continue;
      }

      // Contract e: the tail's super-node is assigned the current rank.
      if (vt == find(game.start)) return AnswerOutcome::answer(coarse.representative[r_plus]);

      for (Pos a = out_head[static_cast<std::size_t>(vt)]; a != kNil;
           a = next_out[static_cast<std::size_t>(a)])
        removed[static_cast<std::size_t>(a)] = 1;
      outdeg[static_cast<std::size_t>(vt)] = 0;
      out_head[static_cast<std::size_t>(vt)] = kNil;
      out_last[static_cast<std::size_t>(vt)] = kNil;

      // Surviving incoming arcs now carry the contracted weight: move them
      // into the bucket being drained, pruning dead list entries on the way.
      Pos prev = kNil;
      Pos a = in_head[static_cast<std::size_t>(vt)];
      while (a != kNil) {
        const Pos next = next_in[static_cast<std::size_t>(a)];
        if (removed[static_cast<std::size_t>(a)]) {
          if (prev == kNil)
            in_head[static_cast<std::size_t>(vt)] = next;
          else
            next_in[static_cast<std::size_t>(prev)] = next;
          if (next == kNil) in_last[static_cast<std::size_t>(vt)] = prev;
        } else {
          if (cur_rank[static_cast<std::size_t>(a)] < r) {
            cur_rank[static_cast<std::size_t>(a)] = r;
            bucket.push_back(a);
          }
          prev = a;
        }
        a = next;
      }

      if (vh != vt) {
        // Merge vt into vh; the head's identity (owner, out-arcs) survives.
        const Pos big = set_size[static_cast<std::size_t>(vt)] >=
                                set_size[static_cast<std::size_t>(vh)]
                            ? vt
                            : vh;
        const Pos small = big == vt ? vh : vt;
        parent[static_cast<std::size_t>(small)] = big;
        set_size[static_cast<std::size_t>(big)] += set_size[static_cast<std::size_t>(small)];
        if (big != vh) {
          owner[static_cast<std::size_t>(big)] = owner[static_cast<std::size_t>(vh)];
          outdeg[static_cast<std::size_t>(big)] = outdeg[static_cast<std::size_t>(vh)];
          out_head[static_cast<std::size_t>(big)] = out_head[static_cast<std::size_t>(vh)];
          out_last[static_cast<std::size_t>(big)] = out_last[static_cast<std::size_t>(vh)];
        }
        // Concatenate the incoming lists of both roots onto `big`.
        const Pos other = big == vt ? vh : vt;
        if (in_head[static_cast<std::size_t>(other)] != kNil) {
          if (in_head[static_cast<std::size_t>(big)] == kNil) {
            in_head[static_cast<std::size_t>(big)] = in_head[static_cast<std::size_t>(other)];
            in_last[static_cast<std::size_t>(big)] = in_last[static_cast<std::size_t>(other)];
          } else {
            next_in[static_cast<std::size_t>(in_last[static_cast<std::size_t>(big)])] =
                in_head[static_cast<std::size_t>(other)];
            in_last[static_cast<std::size_t>(big)] = in_last[static_cast<std::size_t>(other)];
          }
        }
      }
    }
    bucket.clear();
  }

  throw ContractViolation("ordered_solve_game: start node never assigned on sink-free input");
}

std::vector<char> attractor(const MaxPayoffGame& game, const std::vector<char>& target_arcs,
                            std::vector<Pos>* witness_arc) {
  const auto node_count = static_cast<std::size_t>(game.node_count);
  const std::size_t arc_count = game.arcs.size();
  if (target_arcs.size() != arc_count)
    throw std::invalid_argument("attractor: target mask size mismatch");

  const auto in_arcs = incoming_lists(game);
  std::vector<std::int32_t> remaining(node_count, 0);
  for (const auto& arc : game.arcs) ++remaining[static_cast<std::size_t>(arc.tail)];

  std::vector<char> in_set(node_count, 0);
  std::vector<char> arc_good(arc_count, 0);
  if (witness_arc) witness_arc->assign(node_count, -1);
  std::vector<Pos> work;

  auto make_good = [&](Pos a) {
    const auto ai = static_cast<std::size_t>(a);
    if (arc_good[ai]) return;
    arc_good[ai] = 1;
    const Pos u = game.arcs[ai].tail;
    const auto ui = static_cast<std::size_t>(u);
    if (in_set[ui]) return;
    if (game.owners[ui] == Owner::Max) {
      in_set[ui] = 1;
      if (witness_arc) (*witness_arc)[ui] = a;
      work.push_back(u);
    } else if (--remaining[ui] == 0) {
      in_set[ui] = 1;
      work.push_back(u);
    }
  };

  for (std::size_t a = 0; a < arc_count; ++a)
    if (target_arcs[a]) make_good(static_cast<Pos>(a));
  for (std::size_t w = 0; w < work.size(); ++w) {
    for (Pos a : in_arcs[static_cast<std::size_t>(work[w])]) make_good(a);
  }
  return in_set;
}

AnswerOutcome attractor_value_oracle(const MaxPayoffGame& game, const ComparableStore& store) {
  std::vector<double> thresholds;
  thresholds.reserve(game.arcs.size());
  for (const auto& arc : game.arcs) thresholds.push_back(store.key(arc.weight_pos));
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::vector<char> target(game.arcs.size(), 0);
  for (double t : thresholds) {
    for (std::size_t a = 0; a < game.arcs.size(); ++a)
      target[a] = store.key(game.arcs[a].weight_pos) >= t ? 1 : 0;
    const auto reach = attractor(game, target);
    if (reach[static_cast<std::size_t>(game.start)]) {
      Pos best = -1;
      for (const auto& arc : game.arcs)
        if (store.key(arc.weight_pos) == t && (best == -1 || arc.weight_pos < best))
          best = arc.weight_pos;
      return AnswerOutcome::answer(best);
    }
  }
  throw ContractViolation("attractor_value_oracle: sink-free game without a value");
}

GameSolution extract_strategies(const MaxPayoffGame& game, const ComparableStore& store,
                                Pos value_pos) {
  const auto node_count = static_cast<std::size_t>(game.node_count);
  const double value = store.key(value_pos);

  std::vector<std::vector<Pos>> out_arcs(node_count);
  for (std::size_t a = 0; a < game.arcs.size(); ++a)
    out_arcs[static_cast<std::size_t>(game.arcs[a].tail)].push_back(static_cast<Pos>(a));

  std::vector<char> at_least(game.arcs.size(), 0);
  std::vector<char> strictly_above(game.arcs.size(), 0);
  for (std::size_t a = 0; a < game.arcs.size(); ++a) {
    const double w = store.key(game.arcs[a].weight_pos);
    at_least[a] = w >= value ? 1 : 0;
    strictly_above[a] = w > value ? 1 : 0;
  }

  std::vector<Pos> witness;
  const auto secured = attractor(game, at_least, &witness);
  if (!secured[static_cast<std::size_t>(game.start)])
    throw ContractViolation("extract_strategies: claimed value is not securable by Max");
  const auto danger = attractor(game, strictly_above);
  if (danger[static_cast<std::size_t>(game.start)])
    throw ContractViolation("extract_strategies: Max can force more than the claimed value");

  GameSolution solution;
  solution.value = AnswerOutcome::answer(value_pos);
  solution.max_strategy.assign(node_count, -1);
  solution.min_strategy.assign(node_count, -1);

  for (std::size_t v = 0; v < node_count; ++v) {
    if (out_arcs[v].empty()) throw std::invalid_argument("extract_strategies: sink node");
    if (game.owners[v] == Owner::Max) {
      solution.max_strategy[v] =
          (secured[v] && witness[v] != -1) ? witness[v] : out_arcs[v][0];
    } else {
      Pos low_and_safe = -1, safe = -1, low = -1;
      for (Pos a : out_arcs[v]) {
        const auto ai = static_cast<std::size_t>(a);
        const bool is_low = !strictly_above[ai];
        const bool is_safe = !danger[static_cast<std::size_t>(game.arcs[ai].head)];
        if (is_low && is_safe && low_and_safe == -1) low_and_safe = a;
        if (is_safe && safe == -1) safe = a;
        if (is_low && low == -1) low = a;
      }
      Pos choice = low_and_safe != -1 ? low_and_safe : (safe != -1 ? safe : low);
      solution.min_strategy[v] = choice != -1 ? choice : out_arcs[v][0];
    }
  }
  return solution;
}

namespace {

MaxPayoffGame restrict_to_strategy(const MaxPayoffGame& game, Owner restricted,
                                   const std::vector<Pos>& strategy) {
  MaxPayoffGame sub;
  sub.node_count = game.node_count;
  sub.owners = game.owners;
  sub.start = game.start;
  for (std::size_t a = 0; a < game.arcs.size(); ++a) {
    const auto& arc = game.arcs[a];
    if (game.owners[static_cast<std::size_t>(arc.tail)] != restricted ||
        strategy[static_cast<std::size_t>(arc.tail)] == static_cast<Pos>(a))
      sub.arcs.push_back(arc);
  }
  return sub;
}

}  // namespace

bool verify_strategies(const MaxPayoffGame& game, const ComparableStore& store,
                       const GameSolution& solution) {
  if (!solution.value.is_answer()) return false;
  if (solution.max_strategy.size() != static_cast<std::size_t>(game.node_count) ||
      solution.min_strategy.size() != static_cast<std::size_t>(game.node_count))
    throw std::invalid_argument("verify_strategies: strategy vectors sized wrong");
  for (Pos v = 0; v < game.node_count; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    const Pos choice = game.owners[vi] == Owner::Max ? solution.max_strategy[vi]
                                                     : solution.min_strategy[vi];
    if (choice < 0 || static_cast<std::size_t>(choice) >= game.arcs.size() ||
        game.arcs[static_cast<std::size_t>(choice)].tail != v)
      throw std::invalid_argument("verify_strategies: strategy arc does not leave its node");
  }

  const double value = store.key(solution.value.position());
  const auto max_fixed = restrict_to_strategy(game, Owner::Max, solution.max_strategy);
  const auto min_fixed = restrict_to_strategy(game, Owner::Min, solution.min_strategy);
  const AnswerOutcome a = attractor_value_oracle(max_fixed, store);
  const AnswerOutcome b = attractor_value_oracle(min_fixed, store);
  return store.key(a.position()) == value && store.key(b.position()) == value;
}

GameSolveResult solve_game(const MaxPayoffGame& game, ComparableStore& store,
                           Algorithm algorithm) {
  const auto issues = validate_game(game, store.size());
  if (!issues.empty())
    throw std::invalid_argument("solve_game: invalid game: " + issues.front());
  if (store.size() != game.arcs.size())
    throw std::invalid_argument("solve_game: expected one stored key per arc");

  GameSolveResult result;
  const GameOrderedProblem problem(game);
  result.report = meta_solve(problem, store, algorithm);
  if (!result.report.outcome.is_answer())
    throw ContractViolation("solve_game: game value must be a comparable");
  result.solution = extract_strategies(game, store, result.report.outcome.position());
  return result;
}

}  // namespace minmax
