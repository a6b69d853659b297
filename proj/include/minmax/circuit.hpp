#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace minmax {

// Acyclic circuit of k-ary MIN and MAX gates over n inputs. Gate operands
// reference inputs (0 <= ref < input_count) or earlier gates
// (input_count + gate index). Whatever the wiring, evaluation always
// returns one of the input values.
struct MinMaxCircuit {
  enum class Kind { Min, Max };
  struct Gate {
    Kind kind;
    std::vector<std::int32_t> operands;  // non-empty
  };

  std::int32_t input_count = 0;
  std::vector<Gate> gates;
  std::int32_t output = 0;

  std::size_t gate_count() const { return gates.size(); }

  // Appends a gate and returns its reference. Single-operand gates collapse
  // to the operand itself.
  std::int32_t add_gate(Kind kind, std::vector<std::int32_t> operands);
};

double evaluate(const MinMaxCircuit& circuit, std::span<const double> values);

// Non-decreasing map on the key domain, tabulated over the ranks of the
// distinct values of a concrete input list: rank r (0-based, r-th smallest
// distinct value) maps to table[r]. Collisions (equal table entries) are
// allowed and collapse ranks.
struct MonotoneMap {
  std::vector<double> table;

  // Images of `values` under the map; the table must cover all of their
  // distinct ranks.
  std::vector<double> apply(std::span<const double> values) const;
  double apply_one(std::span<const double> values, double value) const;
};

// Whether evaluate(circuit, map(values)) == map(evaluate(circuit, values)),
// the commutation property characterizing min-max computable functions.
bool check_commutation(const MinMaxCircuit& circuit, std::span<const double> values,
                       const MonotoneMap& map);

// Deterministic non-decreasing table over `rank_count` ranks; collapses some
// adjacent ranks with positive probability.
MonotoneMap random_monotone_map(std::uint64_t seed, std::size_t rank_count);

// Deterministic random DAG of min/max gates, for property suites.
MinMaxCircuit random_circuit(std::uint64_t seed, std::int32_t input_count,
                             std::int32_t gate_count);

}  // namespace minmax
