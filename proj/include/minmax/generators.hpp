#pragma once

#include <cstdint>
#include <vector>

#include "minmax/game.hpp"
#include "minmax/interdiction.hpp"

namespace minmax {

struct GeneratedGame {
  MaxPayoffGame game;
  std::vector<double> keys;  // one weight per arc, weight_pos == arc id
};

struct GeneratedNetwork {
  InterdictionNetwork net;
  std::vector<double> keys;  // one capacity per arc, capacity_pos == arc id
};

// Deterministic random sink-free game: every node receives one mandatory
// out-arc, the rest are uniform; weights are random reals (distinct with
// probability one). Requires arcs >= nodes >= 1.
GeneratedGame random_game(std::uint64_t seed, std::int32_t nodes, std::int32_t arcs);

// Deterministic random network with source 0 and sink vertices-1, uniform
// budgets in [0, budget_max]. With ensure_path a random simple s-t path is
// embedded first. Requires vertices >= 2 and arcs >= 1.
GeneratedNetwork random_network(std::uint64_t seed, std::int32_t vertices, std::int32_t arcs,
                                std::int32_t budget_max, bool ensure_path);

}  // namespace minmax
