#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "minmax/game.hpp"
#include "minmax/interdiction.hpp"

namespace minmax {

// Line-oriented instance files, '#' starts a comment.
//
// Game schema:
//   game V E
//   node ID min|max          (V lines, IDs 0..V-1)
//   arc TAIL HEAD WEIGHT     (E lines, WEIGHT a decimal literal)
//   start ID
//
// Network schema:
//   network V E
//   budget ID K              (optional, default 0)
//   arc TAIL HEAD CAPACITY   (E lines)
//   source ID
//   sink ID

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedInstance {
  enum class Kind { Game, Network };
  Kind kind = Kind::Game;
  MaxPayoffGame game;
  InterdictionNetwork net;
  std::vector<double> keys;  // one key per arc, in arc order
};

ParsedInstance parse_instance_text(const std::string& text);
ParsedInstance parse_instance_file(const std::string& path);

std::string game_to_text(const MaxPayoffGame& game, std::span<const double> keys);
std::string network_to_text(const InterdictionNetwork& net, std::span<const double> keys);

// Shortest-exact decimal form of a key (round-trips through parsing).
std::string format_key(double value);

// Machine-readable result of one CLI run.
struct RunReport {
  std::string problem_kind;  // game | interdict | interdict-global
  std::string algorithm;
  std::optional<double> value;  // empty means "disconnected"
  std::optional<Pos> answer_position;
  std::uint64_t comparisons = 0;
  std::int32_t iterations = 0;
  std::vector<std::int64_t> group_counts;
  double elapsed_ms = 0.0;
  std::optional<std::vector<std::vector<Pos>>> removed_by_vertex;
  std::optional<std::vector<Pos>> max_strategy;
  std::optional<std::vector<Pos>> min_strategy;

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace minmax
