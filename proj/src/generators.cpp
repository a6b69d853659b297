#include "minmax/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace minmax {

GeneratedGame random_game(std::uint64_t seed, std::int32_t nodes, std::int32_t arcs) {
  if (nodes < 1 || arcs < nodes)
    throw std::invalid_argument("random_game: need nodes >= 1 and arcs >= nodes");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Pos> pick_node(0, nodes - 1);
  std::uniform_real_distribution<double> pick_weight(0.0, 1'000'000.0);

  GeneratedGame out;
  out.game.node_count = nodes;
  out.game.owners.resize(static_cast<std::size_t>(nodes));
  for (auto& owner : out.game.owners)
    owner = (rng() & 1) ? MaxPayoffGame::Owner::Max : MaxPayoffGame::Owner::Min;
  out.game.start = pick_node(rng);

  for (Pos a = 0; a < arcs; ++a) {
    const Pos tail = a < nodes ? a : pick_node(rng);  // first V arcs kill all sinks
    out.game.arcs.push_back(MaxPayoffGame::Arc{tail, pick_node(rng), a});
    out.keys.push_back(pick_weight(rng));
  }
  return out;
}

GeneratedNetwork random_network(std::uint64_t seed, std::int32_t vertices, std::int32_t arcs,
                                std::int32_t budget_max, bool ensure_path) {
  if (vertices < 2 || arcs < 1)
    throw std::invalid_argument("random_network: need vertices >= 2 and arcs >= 1");
  if (budget_max < 0) throw std::invalid_argument("random_network: negative budget bound");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Pos> pick_vertex(0, vertices - 1);
  std::uniform_real_distribution<double> pick_capacity(0.0, 1'000'000.0);

  GeneratedNetwork out;
  out.net.vertex_count = vertices;
  out.net.source = 0;
  out.net.sink = vertices - 1;
  out.net.budgets.resize(static_cast<std::size_t>(vertices));
  std::uniform_int_distribution<std::int32_t> pick_budget(0, budget_max);
  for (auto& b : out.net.budgets) b = pick_budget(rng);

  Pos next_arc = 0;
  if (ensure_path) {
    // Random simple route through a shuffled prefix of the middle vertices.
    std::vector<Pos> middle;
    for (Pos v = 1; v + 1 < vertices; ++v) middle.push_back(v);
    std::shuffle(middle.begin(), middle.end(), rng);
    const auto max_hops = static_cast<std::size_t>(arcs - 1);
    const std::size_t hops = std::min(middle.size(), max_hops);
    std::uniform_int_distribution<std::size_t> pick_hops(0, hops);
    middle.resize(pick_hops(rng));
    Pos at = out.net.source;
    for (Pos v : middle) {
      out.net.arcs.push_back(InterdictionNetwork::Arc{at, v, next_arc++});
      at = v;
    }
    out.net.arcs.push_back(InterdictionNetwork::Arc{at, out.net.sink, next_arc++});
  }
  while (next_arc < arcs) {
    out.net.arcs.push_back(
        InterdictionNetwork::Arc{pick_vertex(rng), pick_vertex(rng), next_arc});
    ++next_arc;
  }
  for (Pos a = 0; a < arcs; ++a) out.keys.push_back(pick_capacity(rng));
  return out;
}

}  // namespace minmax
