#include "minmax/circuit.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace minmax {

std::int32_t MinMaxCircuit::add_gate(Kind kind, std::vector<std::int32_t> operands) {
  if (operands.empty()) throw std::invalid_argument("circuit: gate needs operands");
  if (operands.size() == 1) return operands[0];
  gates.push_back(Gate{kind, std::move(operands)});
  return input_count + static_cast<std::int32_t>(gates.size()) - 1;
}

double evaluate(const MinMaxCircuit& circuit, std::span<const double> values) {
  if (static_cast<std::int32_t>(values.size()) != circuit.input_count)
    throw std::invalid_argument("evaluate: value count does not match circuit arity");

  std::vector<double> gate_value(circuit.gates.size());
  auto ref_value = [&](std::int32_t ref, std::size_t gate_index) -> double {
    if (ref < 0 || ref >= circuit.input_count + static_cast<std::int32_t>(gate_index))
      throw std::invalid_argument("evaluate: operand reference out of range");
    if (ref < circuit.input_count) return values[static_cast<std::size_t>(ref)];
    return gate_value[static_cast<std::size_t>(ref - circuit.input_count)];
  };

  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& gate = circuit.gates[g];
    if (gate.operands.empty()) throw std::invalid_argument("evaluate: empty gate");
    double acc = ref_value(gate.operands[0], g);
    for (std::size_t i = 1; i < gate.operands.size(); ++i) {
      const double x = ref_value(gate.operands[i], g);
      acc = gate.kind == MinMaxCircuit::Kind::Min ? std::min(acc, x) : std::max(acc, x);
    }
    gate_value[g] = acc;
  }
  return ref_value(circuit.output, circuit.gates.size());
}

namespace {

std::vector<double> distinct_sorted(std::span<const double> values) {
  std::vector<double> d(values.begin(), values.end());
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

}  // namespace

std::vector<double> MonotoneMap::apply(std::span<const double> values) const {
  const auto d = distinct_sorted(values);
  if (d.size() > table.size())
    throw std::invalid_argument("monotone map: table does not cover all ranks");
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    const auto rank = static_cast<std::size_t>(
        std::lower_bound(d.begin(), d.end(), v) - d.begin());
    out.push_back(table[rank]);
  }
  return out;
}

double MonotoneMap::apply_one(std::span<const double> values, double value) const {
  const auto d = distinct_sorted(values);
  const auto it = std::lower_bound(d.begin(), d.end(), value);
  if (it == d.end() || *it != value)
    throw std::invalid_argument("monotone map: value not among the inputs");
  return table[static_cast<std::size_t>(it - d.begin())];
}

bool check_commutation(const MinMaxCircuit& circuit, std::span<const double> values,
                       const MonotoneMap& map) {
  const std::vector<double> mapped = map.apply(values);
  const double lhs = evaluate(circuit, mapped);
  const double rhs = map.apply_one(values, evaluate(circuit, values));
  return lhs == rhs;
}

MonotoneMap random_monotone_map(std::uint64_t seed, std::size_t rank_count) {
  if (rank_count < 1) throw std::invalid_argument("random_monotone_map: need a rank");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> start(-100.0, 100.0);
  std::uniform_real_distribution<double> step(0.5, 2.0);
  std::bernoulli_distribution collapse(0.4);
  MonotoneMap map;
  map.table.reserve(rank_count);
  double current = start(rng);
  map.table.push_back(current);
  for (std::size_t r = 1; r < rank_count; ++r) {
    if (!collapse(rng)) current += step(rng);
    map.table.push_back(current);
  }
  return map;
}

MinMaxCircuit random_circuit(std::uint64_t seed, std::int32_t input_count,
                             std::int32_t gate_count) {
  if (input_count < 1 || gate_count < 0)
    throw std::invalid_argument("random_circuit: bad shape");
  std::mt19937_64 rng(seed);
  MinMaxCircuit circuit;
  circuit.input_count = input_count;
  for (std::int32_t g = 0; g < gate_count; ++g) {
    const std::int32_t pool = input_count + g;
    std::uniform_int_distribution<std::int32_t> pick_ref(0, pool - 1);
    std::uniform_int_distribution<int> pick_arity(2, 4);
    std::vector<std::int32_t> operands;
    const int arity = pick_arity(rng);
    for (int i = 0; i < arity; ++i) operands.push_back(pick_ref(rng));
    const auto kind = (rng() & 1) ? MinMaxCircuit::Kind::Min : MinMaxCircuit::Kind::Max;
    circuit.gates.push_back(MinMaxCircuit::Gate{kind, std::move(operands)});
  }
  circuit.output = input_count + gate_count - 1;
  if (gate_count == 0) {
    std::uniform_int_distribution<std::int32_t> pick_input(0, input_count - 1);
    circuit.output = pick_input(rng);
  }
  return circuit;
}

}  // namespace minmax
