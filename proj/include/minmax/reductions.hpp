#pragma once

#include <cstdint>

#include "minmax/circuit.hpp"
#include "minmax/game.hpp"
#include "minmax/interdiction.hpp"

namespace minmax {

// Explicit witness that widest-path interdiction is a min-max problem:
// MIN over feasible removal combinations of MAX over surviving s-t simple
// paths of MIN over the path's arc capacities. Input i < |E| is arc i's
// capacity; input |E| is a sentinel ranked below all capacities that stands
// for the disconnected outcome. Throws GuardError when
// (removal combinations) x (simple paths) exceeds the guard.
MinMaxCircuit interdiction_to_circuit(const InterdictionNetwork& net,
                                      std::uint64_t guard = 1'000'000);

// Explicit witness that the maximum payoff game value is a min-max problem:
// MAX over Max's positional strategies of MIN over Min's positional
// strategies of the MAX over the arc weights traversed by the unique
// resulting play. Input i is arc i's weight. Throws GuardError when the
// product of the strategy counts exceeds the guard.
MinMaxCircuit game_to_circuit(const MaxPayoffGame& game, std::uint64_t guard = 1'000'000);

}  // namespace minmax
