#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minmax/circuit.hpp"
#include "minmax/errors.hpp"
#include "minmax/game.hpp"
#include "minmax/generators.hpp"
#include "minmax/interdiction.hpp"
#include "minmax/io.hpp"
#include "minmax/meta_solver.hpp"
#include "minmax/recurrence.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalidInstance = 3;
constexpr int kExitGuard = 4;

struct SolveArgs {
  std::string problem;
  std::string algorithm = "sorted";
  std::string file;
  std::int32_t k = 0;
  bool json = false;
};

struct GenArgs {
  std::string problem;
  std::vector<std::int64_t> size;
  std::uint64_t seed = 1;
  std::int32_t budget_max = 0;
  bool ensure_path = false;
};

struct BenchArgs {
  std::string problem = "interdict";
  std::vector<std::int64_t> sizes;
  std::vector<std::string> algorithms = {"sorted", "bisect", "hybrid", "logstar", "adaptive"};
  std::uint64_t seed = 1;
  std::int32_t trials = 1;
};

struct CheckArgs {
  int max_i = 12;
  int circuits = 1000;
  bool negative_control = false;
};

minmax::ParsedInstance load(const SolveArgs& args, bool want_game) {
  minmax::ParsedInstance instance = minmax::parse_instance_file(args.file);
  const bool is_game = instance.kind == minmax::ParsedInstance::Kind::Game;
  if (is_game != want_game) {
    std::cerr << args.file << ": expected a " << (want_game ? "game" : "network")
              << " file for --problem " << args.problem << "\n";
    std::exit(kExitInvalidInstance);
  }
  const auto issues =
      is_game ? minmax::validate_game(instance.game, instance.keys.size())
              : minmax::validate_network(instance.net, instance.keys.size());
  if (!issues.empty()) {
    for (const auto& issue : issues) std::cerr << args.file << ": " << issue << "\n";
    std::exit(kExitInvalidInstance);
  }
  return instance;
}

void emit(const minmax::RunReport& report, bool json) {
  if (json)
    std::cout << report.to_json() << "\n";
  else
    std::cout << report.to_text();
}

int run_solve(const SolveArgs& args) {
  minmax::Algorithm algorithm{};
  if (!minmax::algorithm_from_name(args.algorithm, algorithm)) {
    std::cerr << "unknown algorithm '" << args.algorithm << "'\n";
    return kExitParse;
  }

  minmax::RunReport report;
  report.problem_kind = args.problem;
  report.algorithm = args.algorithm;

  if (args.problem == "game") {
    auto instance = load(args, true);
    minmax::ComparableStore store(instance.keys);
    const auto result = minmax::solve_game(instance.game, store, algorithm);
    report.value = store.key(result.report.outcome.position());
    report.answer_position = result.report.outcome.position();
    report.comparisons = result.report.comparisons;
    report.iterations = result.report.iterations;
    report.group_counts = result.report.group_counts;
    report.elapsed_ms = result.report.elapsed_ms;
    report.max_strategy = result.solution.max_strategy;
    report.min_strategy = result.solution.min_strategy;
  } else if (args.problem == "interdict") {
    auto instance = load(args, false);
    minmax::ComparableStore store(instance.keys);
    const auto result = minmax::solve_interdiction(instance.net, store, algorithm);
    if (result.report.outcome.is_answer()) {
      report.value = store.key(result.report.outcome.position());
      report.answer_position = result.report.outcome.position();
    }
    report.comparisons = result.report.comparisons;
    report.iterations = result.report.iterations;
    report.group_counts = result.report.group_counts;
    report.elapsed_ms = result.report.elapsed_ms;
    report.removed_by_vertex = result.solution.removed_by_vertex;
  } else if (args.problem == "interdict-global") {
    auto instance = load(args, false);
    minmax::ComparableStore store(instance.keys);
    const auto started = std::chrono::steady_clock::now();
    const auto outcome = minmax::global_solve(instance.net, store, args.k);
    report.algorithm = "binary-search";
    if (outcome.is_answer()) {
      report.value = store.key(outcome.position());
      report.answer_position = outcome.position();
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
  } else {
    std::cerr << "unknown problem '" << args.problem << "'\n";
    return kExitParse;
  }
  emit(report, args.json);
  return kExitOk;
}

int run_oracle(const SolveArgs& args) {
  minmax::RunReport report;
  report.problem_kind = args.problem;
  report.algorithm = "oracle";

  if (args.problem == "game") {
    auto instance = load(args, true);
    minmax::ComparableStore store(instance.keys);
    const auto outcome = minmax::attractor_value_oracle(instance.game, store);
    report.value = store.key(outcome.position());
    report.answer_position = outcome.position();
  } else if (args.problem == "interdict" || args.problem == "interdict-global") {
    auto instance = load(args, false);
    minmax::ComparableStore store(instance.keys);
    const auto outcome = args.problem == "interdict"
                             ? minmax::brute_force_interdiction(instance.net, store)
                             : minmax::brute_force_global(instance.net, store, args.k);
    if (outcome.is_answer()) {
      report.value = store.key(outcome.position());
      report.answer_position = outcome.position();
    }
  } else {
    std::cerr << "unknown problem '" << args.problem << "'\n";
    return kExitParse;
  }
  emit(report, args.json);
  return kExitOk;
}

int run_gen(const GenArgs& args) {
  if (args.size.size() != 2) {
    std::cerr << "--size expects two values: vertex count and arc count\n";
    return kExitParse;
  }
  const auto vertices = static_cast<std::int32_t>(args.size[0]);
  const auto arcs = static_cast<std::int32_t>(args.size[1]);
  try {
    if (args.problem == "game") {
      const auto generated = minmax::random_game(args.seed, vertices, arcs);
      std::cout << minmax::game_to_text(generated.game, generated.keys);
    } else if (args.problem == "network") {
      const auto generated = minmax::random_network(args.seed, vertices, arcs,
                                                    args.budget_max, args.ensure_path);
      std::cout << minmax::network_to_text(generated.net, generated.keys);
    } else {
      std::cerr << "unknown problem '" << args.problem << "' (expected game or network)\n";
      return kExitParse;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

int run_bench(const BenchArgs& args) {
  if (args.sizes.empty()) {
    std::cerr << "--sizes expects at least one arc count\n";
    return kExitParse;
  }
  std::vector<minmax::Algorithm> algorithms;
  for (const auto& name : args.algorithms) {
    minmax::Algorithm a{};
    if (!minmax::algorithm_from_name(name, a)) {
      std::cerr << "unknown algorithm '" << name << "'\n";
      return kExitParse;
    }
    algorithms.push_back(a);
  }

  std::printf("n,algorithm,trial,comparisons,iterations,elapsed_ms\n");
  for (const std::int64_t n : args.sizes) {
    if (n < 4) {
      std::cerr << "sizes must be at least 4\n";
      return kExitParse;
    }
    for (std::int32_t trial = 0; trial < args.trials; ++trial) {
      const std::uint64_t seed =
          args.seed * 1000003ULL + static_cast<std::uint64_t>(n) * 131ULL +
          static_cast<std::uint64_t>(trial);
      for (std::size_t i = 0; i < algorithms.size(); ++i) {
        minmax::SolveReport report;
        if (args.problem == "game") {
          auto generated = minmax::random_game(
              seed, std::max<std::int32_t>(1, static_cast<std::int32_t>(n / 4)),
              static_cast<std::int32_t>(n));
          minmax::ComparableStore store(generated.keys);
          const minmax::GameOrderedProblem problem(generated.game);
          report = minmax::meta_solve(problem, store, algorithms[i]);
        } else if (args.problem == "interdict") {
          auto generated = minmax::random_network(
              seed, std::max<std::int32_t>(2, static_cast<std::int32_t>(n / 4)),
              static_cast<std::int32_t>(n), 1, true);
          minmax::ComparableStore store(generated.keys);
          const minmax::InterdictionOrderedProblem problem(generated.net);
          report = minmax::meta_solve(problem, store, algorithms[i]);
        } else {
          std::cerr << "unknown problem '" << args.problem << "'\n";
          return kExitParse;
        }
        std::printf("%lld,%s,%d,%llu,%d,%.3f\n", static_cast<long long>(n),
                    minmax::algorithm_name(algorithms[i]), trial,
                    static_cast<unsigned long long>(report.comparisons), report.iterations,
                    report.elapsed_ms);
      }
    }
  }
  return kExitOk;
}

int run_check(const CheckArgs& args) {
  bool all_ok = true;

  const auto report = minmax::check_recurrence_lemmas(args.max_i, args.negative_control);
  for (const auto& check : report.checks) {
    std::printf("%s recurrence: %s\n", check.passed ? "PASS" : "FAIL", check.name.c_str());
    all_ok = all_ok && check.passed;
  }

  int output_failures = 0;
  int commute_failures = 0;
  std::mt19937_64 rng(12345);
  for (int c = 0; c < args.circuits; ++c) {
    const auto inputs = static_cast<std::int32_t>(2 + rng() % 9);
    const auto gates = static_cast<std::int32_t>(rng() % 12);
    const auto circuit = minmax::random_circuit(rng(), inputs, gates);
    for (int assignment = 0; assignment < 10; ++assignment) {
      std::vector<double> values;
      std::uniform_real_distribution<double> pick(-50.0, 50.0);
      for (std::int32_t i = 0; i < inputs; ++i) values.push_back(pick(rng));
      const double value = minmax::evaluate(circuit, values);
      if (std::find(values.begin(), values.end(), value) == values.end()) ++output_failures;
      for (int m = 0; m < 5; ++m) {
        const auto map = minmax::random_monotone_map(rng(), values.size());
        if (!minmax::check_commutation(circuit, values, map)) ++commute_failures;
      }
    }
  }
  std::printf("%s circuits: evaluation output is always an input (%d circuits)\n",
              output_failures == 0 ? "PASS" : "FAIL", args.circuits);
  std::printf("%s circuits: evaluation commutes with monotone maps\n",
              commute_failures == 0 ? "PASS" : "FAIL");
  all_ok = all_ok && output_failures == 0 && commute_failures == 0;

  return all_ok ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvers, oracles and benchmarks for min-max graph problems"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("--problem", solve_args.problem, "game | interdict | interdict-global")
      ->required();
  solve->add_option("--algorithm", solve_args.algorithm,
                    "sorted | bisect | hybrid | logstar | adaptive");
  solve->add_option("--file", solve_args.file, "instance file")->required();
  solve->add_option("--k", solve_args.k, "global removal budget");
  solve->add_flag("--json", solve_args.json, "emit a JSON report");

  SolveArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "ground-truth value by enumeration");
  oracle->add_option("--problem", oracle_args.problem, "game | interdict | interdict-global")
      ->required();
  oracle->add_option("--file", oracle_args.file, "instance file")->required();
  oracle->add_option("--k", oracle_args.k, "global removal budget");
  oracle->add_flag("--json", oracle_args.json, "emit a JSON report");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random instance file");
  gen->add_option("--problem", gen_args.problem, "game | network")->required();
  gen->add_option("--size", gen_args.size, "vertex count and arc count")
      ->expected(2)
      ->required();
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("--budget-max", gen_args.budget_max, "maximum per-vertex budget");
  gen->add_flag("--ensure-path", gen_args.ensure_path, "guarantee an s-t path");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "comparison-count benchmark CSV");
  bench->add_option("--problem", bench_args.problem, "game | interdict");
  bench->add_option("--sizes", bench_args.sizes, "arc counts to benchmark")->required();
  bench->add_option("--algorithms", bench_args.algorithms, "algorithms to run");
  bench->add_option("--seed", bench_args.seed, "random seed");
  bench->add_option("--trials", bench_args.trials, "trials per size");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "self-contained property checks");
  check->add_option("--max-i", check_args.max_i, "recurrence trace length");
  check->add_option("--circuits", check_args.circuits, "random circuits to test");
  check->add_flag("--negative-control", check_args.negative_control,
                  "corrupt a bound to exercise the failure path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (gen->parsed()) return run_gen(gen_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (check->parsed()) return run_check(check_args);
  } catch (const minmax::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const minmax::GuardError& e) {
    std::cerr << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInstance;
  }
  return kExitParse;
}
