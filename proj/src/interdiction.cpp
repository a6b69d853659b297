#include "minmax/interdiction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "minmax/errors.hpp"

namespace minmax {

bool InterdictionNetwork::may_remove(Pos vertex, std::span<const Pos> removed,
                                     Pos candidate) const {
  if (budget_oracle) return budget_oracle(vertex, removed, candidate);
  return static_cast<std::int32_t>(removed.size()) < budget_of(vertex);
}

std::vector<std::string> validate_network(const InterdictionNetwork& net,
                                          std::size_t key_count) {
  std::vector<std::string> issues;
  if (net.vertex_count < 2) issues.push_back("network needs at least two vertices");
  if (net.source < 0 || net.source >= net.vertex_count)
    issues.push_back("source out of range");
  if (net.sink < 0 || net.sink >= net.vertex_count) issues.push_back("sink out of range");
  if (net.source == net.sink) issues.push_back("source equals sink");
  if (!net.budgets.empty()) {
    if (net.budgets.size() != static_cast<std::size_t>(net.vertex_count))
      issues.push_back("budget list does not match the vertex count");
    for (std::size_t v = 0; v < net.budgets.size(); ++v)
      if (net.budgets[v] < 0)
        issues.push_back("vertex " + std::to_string(v) + " has a negative budget");
  }
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const auto& arc = net.arcs[a];
    if (arc.tail < 0 || arc.tail >= net.vertex_count || arc.head < 0 ||
        arc.head >= net.vertex_count)
      issues.push_back("arc " + std::to_string(a) + " references a missing vertex");
    else if (arc.capacity_pos < 0 ||
             static_cast<std::size_t>(arc.capacity_pos) >= key_count)
      issues.push_back("arc " + std::to_string(a) + " has an out-of-range capacity position");
  }
  return issues;
}

AnswerOutcome ordered_solve_interdiction(const InterdictionNetwork& net,
                                         const CoarseInstance& coarse,
                                         InterdictionRunLog* log) {
  const auto vertex_count = static_cast<std::size_t>(net.vertex_count);
  const std::size_t arc_count = net.arcs.size();
  if (vertex_count < 2 || net.source == net.sink)
    throw std::invalid_argument("ordered_solve_interdiction: invalid network");
  for (const auto& arc : net.arcs)
    if (arc.capacity_pos < 0 ||
        static_cast<std::size_t>(arc.capacity_pos) >= coarse.rank_of.size())
      throw std::invalid_argument(
          "ordered_solve_interdiction: capacity position outside the coarse instance");

  std::vector<std::vector<Pos>> in_arcs(vertex_count), out_arcs(vertex_count);
  for (std::size_t a = 0; a < arc_count; ++a) {
    in_arcs[static_cast<std::size_t>(net.arcs[a].head)].push_back(static_cast<Pos>(a));
    out_arcs[static_cast<std::size_t>(net.arcs[a].tail)].push_back(static_cast<Pos>(a));
  }

  // Disjoint-set; every merge goes into the sink's super-node.
  std::vector<Pos> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](Pos x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  const Pos sink_root = net.sink;

  const auto rank_count = static_cast<std::size_t>(coarse.rank_count());
  std::vector<std::vector<Pos>> buckets(rank_count);
  std::vector<std::int32_t> cur_rank(arc_count, -1);
  std::vector<char> removed(arc_count, 0);
  std::vector<std::vector<Pos>> removed_at(vertex_count);

  auto insert_incoming = [&](Pos a, std::int32_t cap) {
    const auto ai = static_cast<std::size_t>(a);
    if (find(net.arcs[ai].tail) == sink_root) {
      removed[ai] = 1;  // internal to the sink super-node, useless for s-t width
      return;
    }
    const std::int32_t rank =
        std::min(coarse.rank_of[static_cast<std::size_t>(net.arcs[ai].capacity_pos)], cap);
    cur_rank[ai] = rank;
    buckets[static_cast<std::size_t>(rank)].push_back(a);
  };

  for (Pos a : in_arcs[static_cast<std::size_t>(net.sink)])
    insert_incoming(a, static_cast<std::int32_t>(rank_count) - 1);

  std::int32_t previous_rank = static_cast<std::int32_t>(rank_count);
  for (std::size_t r_plus = rank_count; r_plus-- > 0;) {
    const auto r = static_cast<std::int32_t>(r_plus);
    auto& bucket = buckets[r_plus];
    for (std::size_t c = 0; c < bucket.size(); ++c) {  // grows while draining
      const Pos e = bucket[c];
      const auto ei = static_cast<std::size_t>(e);
      if (removed[ei]) continue;
      if (cur_rank[ei] != r)
        throw ContractViolation("ordered_solve_interdiction: stale bucket entry");
      if (r > previous_rank)
        throw ContractViolation("ordered_solve_interdiction: extraction rank increased");
      previous_rank = r;
      if (log) log->extraction_ranks.push_back(r);

      const Pos v = net.arcs[ei].tail;
      const auto vi = static_cast<std::size_t>(v);
      if (find(v) == sink_root)
        throw ContractViolation("ordered_solve_interdiction: live arc inside the sink node");

      if (net.may_remove(v, removed_at[vi], e)) {
        removed[ei] = 1;
        removed_at[vi].push_back(e);
        if (log) log->removals.emplace_back(v, e);
        continue;
      }

      // Budget exhausted: v joins the sink's super-node at width rank r.
      if (v == net.source) return AnswerOutcome::answer(coarse.representative[r_plus]);
      for (Pos a : out_arcs[vi]) removed[static_cast<std::size_t>(a)] = 1;
      parent[vi] = sink_root;
      for (Pos a : in_arcs[vi]) {
        if (removed[static_cast<std::size_t>(a)]) continue;
        insert_incoming(a, r);
      }
    }
    bucket.clear();
  }

  return AnswerOutcome::below_all();
}

namespace {

// Arc indices sorted by increasing tie-broken capacity.
std::vector<Pos> arcs_by_capacity(const InterdictionNetwork& net, const ComparableStore& store) {
  std::vector<Pos> order(net.arcs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Pos a, Pos b) {
    const Pos pa = net.arcs[static_cast<std::size_t>(a)].capacity_pos;
    const Pos pb = net.arcs[static_cast<std::size_t>(b)].capacity_pos;
    if (pa == pb) return a < b;
    return store.less_raw(pa, pb);
  });
  return order;
}

// Reachability from source to sink using arcs with sorted index >= cutoff
// that are not removed.
bool reaches_sink(const InterdictionNetwork& net, const std::vector<std::int32_t>& arc_level,
                  std::int32_t cutoff, const std::vector<char>* removed_arcs) {
  const auto vertex_count = static_cast<std::size_t>(net.vertex_count);
  std::vector<std::vector<Pos>> out(vertex_count);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    if (removed_arcs && (*removed_arcs)[a]) continue;
    if (arc_level[a] < cutoff) continue;
    out[static_cast<std::size_t>(net.arcs[a].tail)].push_back(static_cast<Pos>(a));
  }
  std::vector<char> seen(vertex_count, 0);
  std::vector<Pos> stack{net.source};
  seen[static_cast<std::size_t>(net.source)] = 1;
  while (!stack.empty()) {
    const Pos u = stack.back();
    stack.pop_back();
    if (u == net.sink) return true;
    for (Pos a : out[static_cast<std::size_t>(u)]) {
      const Pos w = net.arcs[static_cast<std::size_t>(a)].head;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace

AnswerOutcome widest_path_excluding(const InterdictionNetwork& net, const ComparableStore& store,
                                    const std::vector<char>& removed_arcs) {
  if (net.arcs.empty()) return AnswerOutcome::below_all();
  const auto order = arcs_by_capacity(net, store);
  std::vector<std::int32_t> arc_level(net.arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    arc_level[static_cast<std::size_t>(order[i])] = static_cast<std::int32_t>(i);

  if (!reaches_sink(net, arc_level, 0, &removed_arcs)) return AnswerOutcome::below_all();
  // Largest cutoff that still connects source to sink.
  std::int32_t lo = 0, hi = static_cast<std::int32_t>(net.arcs.size()) - 1;
  while (lo < hi) {
    const std::int32_t mid = (lo + hi + 1) / 2;
    if (reaches_sink(net, arc_level, mid, &removed_arcs))
      lo = mid;
    else
      hi = mid - 1;
  }
  return AnswerOutcome::answer(net.arcs[static_cast<std::size_t>(order[static_cast<std::size_t>(lo)])].capacity_pos);
}

AnswerOutcome widest_path(const InterdictionNetwork& net, const ComparableStore& store) {
  return widest_path_excluding(net, store, std::vector<char>(net.arcs.size(), 0));
}

namespace detail {

std::vector<std::vector<Pos>> feasible_removals_at(const InterdictionNetwork& net, Pos vertex) {
  std::vector<Pos> out;
  for (std::size_t a = 0; a < net.arcs.size(); ++a)
    if (net.arcs[a].tail == vertex) out.push_back(static_cast<Pos>(a));

  std::vector<std::vector<Pos>> result{{}};
  std::vector<Pos> current;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < out.size(); ++i) {
      if (!net.may_remove(vertex, current, out[i])) continue;
      current.push_back(out[i]);
      result.push_back(current);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return result;
}

void for_each_removal_combination(const InterdictionNetwork& net, std::uint64_t guard,
                                  const std::function<void(const std::vector<char>&)>& fn) {
  std::vector<std::vector<std::vector<Pos>>> options;
  std::uint64_t combinations = 1;
  for (Pos v = 0; v < net.vertex_count; ++v) {
    options.push_back(feasible_removals_at(net, v));
    combinations *= options.back().size();
    if (combinations > guard)
      throw GuardError("removal combinations exceed the enumeration guard");
  }

  std::vector<char> mask(net.arcs.size(), 0);
  auto recurse = [&](auto&& self, std::size_t v) -> void {
    if (v == options.size()) {
      fn(mask);
      return;
    }
    for (const auto& subset : options[v]) {
      for (Pos a : subset) mask[static_cast<std::size_t>(a)] = 1;
      self(self, v + 1);
      for (Pos a : subset) mask[static_cast<std::size_t>(a)] = 0;
    }
  };
  recurse(recurse, 0);
}

}  // namespace detail

namespace {

// BelowAll sorts under every answer; answers compare by tie-broken key.
bool outcome_less(const ComparableStore& store, const AnswerOutcome& a,
                  const AnswerOutcome& b) {
  if (a.is_below_all()) return !b.is_below_all();
  if (b.is_below_all()) return false;
  return store.less_raw(a.position(), b.position());
}

}  // namespace

AnswerOutcome brute_force_interdiction(const InterdictionNetwork& net,
                                       const ComparableStore& store, std::uint64_t guard) {
  std::optional<AnswerOutcome> best;
  detail::for_each_removal_combination(net, guard, [&](const std::vector<char>& mask) {
    const AnswerOutcome width = widest_path_excluding(net, store, mask);
    if (!best || outcome_less(store, width, *best)) best = width;
  });
  return *best;
}

bool arc_connectivity_at_most(const InterdictionNetwork& net,
                              const std::vector<char>& arc_subset, std::int32_t k) {
  if (k < 0) throw std::invalid_argument("arc_connectivity_at_most: k must be non-negative");
  if (arc_subset.size() != net.arcs.size())
    throw std::invalid_argument("arc_connectivity_at_most: subset mask size mismatch");

  const auto vertex_count = static_cast<std::size_t>(net.vertex_count);
  struct Edge {
    Pos to;
    std::int32_t cap;
    std::size_t rev;
  };
  std::vector<std::vector<Edge>> adj(vertex_count);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    if (!arc_subset[a]) continue;
    const auto& arc = net.arcs[a];
    const auto ti = static_cast<std::size_t>(arc.tail);
    const auto hi = static_cast<std::size_t>(arc.head);
    adj[ti].push_back(Edge{arc.head, 1, adj[hi].size() + (arc.tail == arc.head ? 1 : 0)});
    adj[hi].push_back(Edge{arc.tail, 0, adj[ti].size() - 1});
  }

  std::vector<std::int32_t> level(vertex_count);
  std::vector<std::size_t> iter(vertex_count);
  const auto s = static_cast<std::size_t>(net.source);

  auto bfs = [&]() {
    std::fill(level.begin(), level.end(), -1);
    std::vector<Pos> queue{net.source};
    level[s] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto ui = static_cast<std::size_t>(queue[q]);
      for (const Edge& e : adj[ui]) {
        if (e.cap > 0 && level[static_cast<std::size_t>(e.to)] < 0) {
          level[static_cast<std::size_t>(e.to)] = level[ui] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level[static_cast<std::size_t>(net.sink)] >= 0;
  };

  auto dfs = [&](auto&& self, Pos u) -> bool {
    if (u == net.sink) return true;
    const auto ui = static_cast<std::size_t>(u);
    for (std::size_t& i = iter[ui]; i < adj[ui].size(); ++i) {
      Edge& e = adj[ui][i];
      if (e.cap <= 0 || level[static_cast<std::size_t>(e.to)] != level[ui] + 1) continue;
      if (self(self, e.to)) {
        e.cap -= 1;
        adj[static_cast<std::size_t>(e.to)][e.rev].cap += 1;
        return true;
      }
    }
    return false;
  };

  std::int64_t flow = 0;
  while (bfs()) {
    std::fill(iter.begin(), iter.end(), 0);
    while (dfs(dfs, net.source)) {
      ++flow;
      if (flow > k) return false;
    }
  }
  return true;
}

AnswerOutcome global_solve(const InterdictionNetwork& net, const ComparableStore& store,
                           std::int32_t k) {
  if (k < 0) throw std::invalid_argument("global_solve: k must be non-negative");
  if (net.arcs.empty()) return AnswerOutcome::below_all();

  const auto order = arcs_by_capacity(net, store);
  const auto arc_count = static_cast<std::int32_t>(net.arcs.size());

  // connected(q) keeps only the arcs ranked strictly above the q smallest.
  auto at_most_k = [&](std::int32_t q) {
    std::vector<char> subset(net.arcs.size(), 0);
    for (std::int32_t i = q; i < arc_count; ++i)
      subset[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
    return arc_connectivity_at_most(net, subset, k);
  };

  // Smallest q in [0, arc_count] passing; q = arc_count always passes.
  std::int32_t lo = 0, hi = arc_count;
  while (lo < hi) {
    const std::int32_t mid = (lo + hi) / 2;
    if (at_most_k(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  if (lo == 0) return AnswerOutcome::below_all();
  return AnswerOutcome::answer(
      net.arcs[static_cast<std::size_t>(order[static_cast<std::size_t>(lo - 1)])].capacity_pos);
}

AnswerOutcome brute_force_global(const InterdictionNetwork& net, const ComparableStore& store,
                                 std::int32_t k, std::uint64_t guard) {
  if (k < 0) throw std::invalid_argument("brute_force_global: k must be non-negative");
  const std::size_t arc_count = net.arcs.size();

  std::uint64_t subsets = 1;  // empty set
  std::uint64_t binomial = 1;
  for (std::int32_t i = 1; i <= k && static_cast<std::size_t>(i) <= arc_count; ++i) {
    binomial = binomial * (arc_count - static_cast<std::size_t>(i) + 1) /
               static_cast<std::uint64_t>(i);
    subsets += binomial;
    if (subsets > guard) throw GuardError("global removal subsets exceed the enumeration guard");
  }

  std::optional<AnswerOutcome> best;
  std::vector<char> mask(arc_count, 0);
  auto recurse = [&](auto&& self, std::size_t start, std::int32_t left) -> void {
    const AnswerOutcome width = widest_path_excluding(net, store, mask);
    if (!best || outcome_less(store, width, *best)) best = width;
    if (left == 0) return;
    for (std::size_t a = start; a < arc_count; ++a) {
      mask[a] = 1;
      self(self, a + 1, left - 1);
      mask[a] = 0;
    }
  };
  recurse(recurse, 0, k);
  return *best;
}

bool verify_interdiction(const InterdictionNetwork& net, const ComparableStore& store,
                         const InterdictionSolution& solution) {
  if (solution.removed_by_vertex.size() != static_cast<std::size_t>(net.vertex_count))
    return false;

  std::vector<char> removed(net.arcs.size(), 0);
  for (Pos v = 0; v < net.vertex_count; ++v) {
    const auto& list = solution.removed_by_vertex[static_cast<std::size_t>(v)];
    std::vector<Pos> taken;
    for (Pos a : list) {
      if (a < 0 || static_cast<std::size_t>(a) >= net.arcs.size()) return false;
      if (net.arcs[static_cast<std::size_t>(a)].tail != v) return false;
      if (removed[static_cast<std::size_t>(a)]) return false;
      if (!net.may_remove(v, taken, a)) return false;
      taken.push_back(a);
      removed[static_cast<std::size_t>(a)] = 1;
    }
  }

  const AnswerOutcome residual_width = widest_path_excluding(net, store, removed);
  if (residual_width.is_below_all() != solution.width.is_below_all()) return false;
  if (solution.width.is_answer() &&
      store.key(residual_width.position()) != store.key(solution.width.position()))
    return false;

  if (solution.width.is_answer()) {
    if (!solution.witness_path || solution.witness_path->empty()) return false;
    const double width_key = store.key(solution.width.position());
    Pos at = net.source;
    double min_cap = store.key(
        net.arcs[static_cast<std::size_t>(solution.witness_path->front())].capacity_pos);
    for (Pos a : *solution.witness_path) {
      if (a < 0 || static_cast<std::size_t>(a) >= net.arcs.size()) return false;
      if (removed[static_cast<std::size_t>(a)]) return false;
      const auto& arc = net.arcs[static_cast<std::size_t>(a)];
      if (arc.tail != at) return false;
      at = arc.head;
      min_cap = std::min(min_cap, store.key(arc.capacity_pos));
    }
    if (at != net.sink) return false;
    if (min_cap != width_key) return false;
  }
  return true;
}

InterdictionSolveResult solve_interdiction(const InterdictionNetwork& net,
                                           ComparableStore& store, Algorithm algorithm) {
  const auto issues = validate_network(net, store.size());
  if (!issues.empty())
    throw std::invalid_argument("solve_interdiction: invalid network: " + issues.front());
  if (store.size() != net.arcs.size())
    throw std::invalid_argument("solve_interdiction: expected one stored key per arc");

  InterdictionSolveResult result;
  const InterdictionOrderedProblem problem(net);
  result.report = meta_solve(problem, store, algorithm);
  result.solution.width = result.report.outcome;

  // Replay the fully determined run (uncharged) to recover the removal set.
  const CoarseInstance refined = refined_coarse(store);
  InterdictionRunLog log;
  const AnswerOutcome replay = ordered_solve_interdiction(net, refined, &log);
  if (!(replay == result.report.outcome))
    throw ContractViolation("solve_interdiction: replay disagrees with the solve");

  result.solution.removed_by_vertex.assign(static_cast<std::size_t>(net.vertex_count), {});
  std::vector<char> removed(net.arcs.size(), 0);
  for (const auto& [vertex, arc] : log.removals) {
    result.solution.removed_by_vertex[static_cast<std::size_t>(vertex)].push_back(arc);
    removed[static_cast<std::size_t>(arc)] = 1;
  }

  if (result.solution.width.is_answer()) {
    // Breadth search over surviving arcs at least as wide as the answer.
    const std::int32_t answer_rank =
        refined.rank_of[static_cast<std::size_t>(result.solution.width.position())];
    const auto vertex_count = static_cast<std::size_t>(net.vertex_count);
    std::vector<Pos> parent_arc(vertex_count, -1);
    std::vector<char> seen(vertex_count, 0);
    std::vector<Pos> queue{net.source};
    seen[static_cast<std::size_t>(net.source)] = 1;
    for (std::size_t q = 0; q < queue.size() && !seen[static_cast<std::size_t>(net.sink)];
         ++q) {
      const Pos u = queue[q];
      for (std::size_t a = 0; a < net.arcs.size(); ++a) {
        if (removed[a]) continue;
        const auto& arc = net.arcs[a];
        if (arc.tail != u) continue;
        if (refined.rank_of[static_cast<std::size_t>(arc.capacity_pos)] < answer_rank)
          continue;
        if (seen[static_cast<std::size_t>(arc.head)]) continue;
        seen[static_cast<std::size_t>(arc.head)] = 1;
        parent_arc[static_cast<std::size_t>(arc.head)] = static_cast<Pos>(a);
        queue.push_back(arc.head);
      }
    }
    if (!seen[static_cast<std::size_t>(net.sink)])
      throw ContractViolation("solve_interdiction: no witness path at the answer width");
    std::vector<Pos> path;
    for (Pos u = net.sink; u != net.source;) {
      const Pos a = parent_arc[static_cast<std::size_t>(u)];
      path.push_back(a);
      u = net.arcs[static_cast<std::size_t>(a)].tail;
    }
    std::reverse(path.begin(), path.end());
    result.solution.witness_path = std::move(path);
  }
  return result;
}

}  // namespace minmax
