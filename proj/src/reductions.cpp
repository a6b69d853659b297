#include "minmax/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "minmax/errors.hpp"

namespace minmax {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

// All vertex-simple s-t paths as arc id lists; aborts past the guard.
std::vector<std::vector<Pos>> simple_paths(const InterdictionNetwork& net,
                                           std::uint64_t guard) {
  std::vector<std::vector<Pos>> out_arcs(static_cast<std::size_t>(net.vertex_count));
  for (std::size_t a = 0; a < net.arcs.size(); ++a)
    out_arcs[static_cast<std::size_t>(net.arcs[a].tail)].push_back(static_cast<Pos>(a));

  std::vector<std::vector<Pos>> paths;
  std::vector<Pos> current;
  std::vector<char> on_path(static_cast<std::size_t>(net.vertex_count), 0);
  auto dfs = [&](auto&& self, Pos v) -> void {
    if (v == net.sink) {
      if (paths.size() >= guard)
        throw GuardError("simple path count exceeds the enumeration guard");
      paths.push_back(current);
      return;
    }
    on_path[static_cast<std::size_t>(v)] = 1;
    for (Pos a : out_arcs[static_cast<std::size_t>(v)]) {
      const Pos head = net.arcs[static_cast<std::size_t>(a)].head;
      if (on_path[static_cast<std::size_t>(head)]) continue;
      current.push_back(a);
      self(self, head);
      current.pop_back();
    }
    on_path[static_cast<std::size_t>(v)] = 0;
  };
  dfs(dfs, net.source);
  return paths;
}

}  // namespace

MinMaxCircuit interdiction_to_circuit(const InterdictionNetwork& net, std::uint64_t guard) {
  const auto arc_count = static_cast<std::int32_t>(net.arcs.size());
  for (const auto& arc : net.arcs)
    if (arc.capacity_pos < 0 || arc.capacity_pos >= arc_count)
      throw std::invalid_argument("interdiction_to_circuit: needs one capacity key per arc");

  MinMaxCircuit circuit;
  circuit.input_count = arc_count + 1;  // the extra input is the sentinel
  const std::int32_t sentinel = arc_count;

  const auto paths = simple_paths(net, guard);
  if (paths.empty()) {
    circuit.output = sentinel;
    return circuit;
  }

  std::uint64_t combinations = 1;
  for (Pos v = 0; v < net.vertex_count; ++v)
    combinations = saturating_mul(combinations, detail::feasible_removals_at(net, v).size());
  if (saturating_mul(combinations, paths.size()) > guard)
    throw GuardError("removal combinations x paths exceeds the circuit guard");

  std::vector<std::int32_t> path_gate;
  path_gate.reserve(paths.size());
  for (const auto& path : paths) {
    std::vector<std::int32_t> operands;
    operands.reserve(path.size());
    for (Pos a : path) operands.push_back(net.arcs[static_cast<std::size_t>(a)].capacity_pos);
    path_gate.push_back(circuit.add_gate(MinMaxCircuit::Kind::Min, std::move(operands)));
  }

  std::vector<std::int32_t> scenario_gates;
  detail::for_each_removal_combination(net, guard, [&](const std::vector<char>& mask) {
    std::vector<std::int32_t> survivors;
    for (std::size_t p = 0; p < paths.size(); ++p) {
      bool alive = true;
      for (Pos a : paths[p])
        if (mask[static_cast<std::size_t>(a)]) {
          alive = false;
          break;
        }
      if (alive) survivors.push_back(path_gate[p]);
    }
    scenario_gates.push_back(
        survivors.empty() ? sentinel
                          : circuit.add_gate(MinMaxCircuit::Kind::Max, std::move(survivors)));
  });

  circuit.output = circuit.add_gate(MinMaxCircuit::Kind::Min, std::move(scenario_gates));
  return circuit;
}

MinMaxCircuit game_to_circuit(const MaxPayoffGame& game, std::uint64_t guard) {
  const auto arc_count = static_cast<std::int32_t>(game.arcs.size());
  for (const auto& arc : game.arcs)
    if (arc.weight_pos < 0 || arc.weight_pos >= arc_count)
      throw std::invalid_argument("game_to_circuit: needs one weight key per arc");

  std::vector<std::vector<Pos>> out_arcs(static_cast<std::size_t>(game.node_count));
  for (std::size_t a = 0; a < game.arcs.size(); ++a)
    out_arcs[static_cast<std::size_t>(game.arcs[a].tail)].push_back(static_cast<Pos>(a));

  std::vector<Pos> max_nodes, min_nodes;
  std::uint64_t sigma_count = 1, tau_count = 1;
  for (Pos v = 0; v < game.node_count; ++v) {
    const auto& outs = out_arcs[static_cast<std::size_t>(v)];
    if (outs.empty()) throw std::invalid_argument("game_to_circuit: sink node");
    if (game.owners[static_cast<std::size_t>(v)] == MaxPayoffGame::Owner::Max) {
      max_nodes.push_back(v);
      sigma_count = saturating_mul(sigma_count, outs.size());
    } else {
      min_nodes.push_back(v);
      tau_count = saturating_mul(tau_count, outs.size());
    }
  }
  if (saturating_mul(sigma_count, tau_count) > guard)
    throw GuardError("strategy profile count exceeds the circuit guard");

  MinMaxCircuit circuit;
  circuit.input_count = arc_count;

  std::vector<Pos> choice(static_cast<std::size_t>(game.node_count), -1);
  auto decode = [&](const std::vector<Pos>& nodes, std::uint64_t index) {
    for (Pos v : nodes) {
      const auto& outs = out_arcs[static_cast<std::size_t>(v)];
      choice[static_cast<std::size_t>(v)] = outs[index % outs.size()];
      index /= outs.size();
    }
  };

  std::vector<std::int32_t> sigma_gates;
  std::vector<char> visited(static_cast<std::size_t>(game.node_count));
  for (std::uint64_t s = 0; s < sigma_count; ++s) {
    decode(max_nodes, s);
    std::vector<std::int32_t> tau_gates;
    for (std::uint64_t t = 0; t < tau_count; ++t) {
      decode(min_nodes, t);
      // The unique play under both strategies: walk until a node repeats.
      std::fill(visited.begin(), visited.end(), 0);
      std::vector<std::int32_t> traversed;
      Pos v = game.start;
      visited[static_cast<std::size_t>(v)] = 1;
      while (true) {
        const Pos a = choice[static_cast<std::size_t>(v)];
        traversed.push_back(game.arcs[static_cast<std::size_t>(a)].weight_pos);
        v = game.arcs[static_cast<std::size_t>(a)].head;
        if (visited[static_cast<std::size_t>(v)]) break;
        visited[static_cast<std::size_t>(v)] = 1;
      }
      std::sort(traversed.begin(), traversed.end());
      traversed.erase(std::unique(traversed.begin(), traversed.end()), traversed.end());
      tau_gates.push_back(circuit.add_gate(MinMaxCircuit::Kind::Max, std::move(traversed)));
    }
    sigma_gates.push_back(circuit.add_gate(MinMaxCircuit::Kind::Min, std::move(tau_gates)));
  }
  circuit.output = circuit.add_gate(MinMaxCircuit::Kind::Max, std::move(sigma_gates));
  return circuit;
}

}  // namespace minmax
