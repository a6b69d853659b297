#include "minmax/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace minmax {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream stream(text);
  std::string raw;
  int number = 0;
  while (std::getline(stream, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    std::string word;
    while (words >> word) line.tokens.push_back(word);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::int64_t parse_int(const Line& line, const std::string& token, const char* what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("expected an integer for ") + what);
  }
  if (used != token.size())
    throw ParseError(line.number, std::string("trailing characters after ") + what);
  return value;
}

double parse_key(const Line& line, const std::string& token) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected a decimal literal");
  }
  if (used != token.size()) throw ParseError(line.number, "trailing characters after number");
  if (!std::isfinite(value)) throw ParseError(line.number, "keys must be finite");
  return value;
}

Pos parse_id(const Line& line, const std::string& token, std::int64_t limit, const char* what) {
  const std::int64_t value = parse_int(line, token, what);
  if (value < 0 || value >= limit)
    throw ParseError(line.number,
                     std::string(what) + " " + token + " is outside 0.." + std::to_string(limit - 1));
  return static_cast<Pos>(value);
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity)
    throw ParseError(line.number, "expected " + std::to_string(arity - 1) +
                                      " fields after '" + line.tokens[0] + "'");
}

}  // namespace

ParsedInstance parse_instance_text(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty instance file");

  const Line& header = lines[0];
  expect_arity(header, 3);
  const bool is_game = header.tokens[0] == "game";
  if (!is_game && header.tokens[0] != "network")
    throw ParseError(header.number, "expected a 'game' or 'network' header");
  const std::int64_t vertex_count = parse_int(header, header.tokens[1], "vertex count");
  const std::int64_t arc_count = parse_int(header, header.tokens[2], "arc count");
  if (vertex_count < 1 || arc_count < 0)
    throw ParseError(header.number, "invalid instance size");

  ParsedInstance out;
  out.kind = is_game ? ParsedInstance::Kind::Game : ParsedInstance::Kind::Network;

  std::vector<int> owner_seen(static_cast<std::size_t>(vertex_count), 0);
  std::vector<MaxPayoffGame::Owner> owners(static_cast<std::size_t>(vertex_count),
                                           MaxPayoffGame::Owner::Min);
  std::vector<std::int32_t> budgets(static_cast<std::size_t>(vertex_count), 0);
  std::vector<int> budget_seen(static_cast<std::size_t>(vertex_count), 0);
  std::optional<Pos> start, source, sink;

  struct RawArc {
    Pos tail, head;
  };
  std::vector<RawArc> arcs;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kw = line.tokens[0];
    if (kw == "node") {
      if (!is_game) throw ParseError(line.number, "'node' lines belong to game files");
      expect_arity(line, 3);
      const Pos id = parse_id(line, line.tokens[1], vertex_count, "node id");
      if (owner_seen[static_cast<std::size_t>(id)]++)
        throw ParseError(line.number, "node " + line.tokens[1] + " defined twice");
      if (line.tokens[2] == "min")
        owners[static_cast<std::size_t>(id)] = MaxPayoffGame::Owner::Min;
      else if (line.tokens[2] == "max")
        owners[static_cast<std::size_t>(id)] = MaxPayoffGame::Owner::Max;
      else
        throw ParseError(line.number, "node owner must be 'min' or 'max'");
    } else if (kw == "budget") {
      if (is_game) throw ParseError(line.number, "'budget' lines belong to network files");
      expect_arity(line, 3);
      const Pos id = parse_id(line, line.tokens[1], vertex_count, "vertex id");
      if (budget_seen[static_cast<std::size_t>(id)]++)
        throw ParseError(line.number, "budget for vertex " + line.tokens[1] + " defined twice");
      const std::int64_t k = parse_int(line, line.tokens[2], "budget");
      if (k < 0) throw ParseError(line.number, "budgets must be non-negative");
      budgets[static_cast<std::size_t>(id)] = static_cast<std::int32_t>(k);
    } else if (kw == "arc") {
      expect_arity(line, 4);
      if (static_cast<std::int64_t>(arcs.size()) == arc_count)
        throw ParseError(line.number, "more arcs than the header announced");
      const Pos tail = parse_id(line, line.tokens[1], vertex_count, "arc tail");
      const Pos head = parse_id(line, line.tokens[2], vertex_count, "arc head");
      out.keys.push_back(parse_key(line, line.tokens[3]));
      arcs.push_back(RawArc{tail, head});
    } else if (kw == "start") {
      if (!is_game) throw ParseError(line.number, "'start' belongs to game files");
      expect_arity(line, 2);
      if (start) throw ParseError(line.number, "duplicate 'start'");
      start = parse_id(line, line.tokens[1], vertex_count, "start node");
    } else if (kw == "source") {
      if (is_game) throw ParseError(line.number, "'source' belongs to network files");
      expect_arity(line, 2);
      if (source) throw ParseError(line.number, "duplicate 'source'");
      source = parse_id(line, line.tokens[1], vertex_count, "source vertex");
    } else if (kw == "sink") {
      if (is_game) throw ParseError(line.number, "'sink' belongs to network files");
      expect_arity(line, 2);
      if (sink) throw ParseError(line.number, "duplicate 'sink'");
      sink = parse_id(line, line.tokens[1], vertex_count, "sink vertex");
    } else {
      throw ParseError(line.number, "unknown keyword '" + kw + "'");
    }
  }

  const int last_line = lines.back().number;
  if (static_cast<std::int64_t>(arcs.size()) != arc_count)
    throw ParseError(last_line, "expected " + std::to_string(arc_count) + " arcs, found " +
                                    std::to_string(arcs.size()));

  if (is_game) {
    for (std::size_t v = 0; v < owner_seen.size(); ++v)
      if (!owner_seen[v])
        throw ParseError(last_line, "node " + std::to_string(v) + " never defined");
    if (!start) throw ParseError(last_line, "missing 'start'");
    out.game.node_count = static_cast<std::int32_t>(vertex_count);
    out.game.owners = std::move(owners);
    out.game.start = *start;
    for (std::size_t a = 0; a < arcs.size(); ++a)
      out.game.arcs.push_back(
          MaxPayoffGame::Arc{arcs[a].tail, arcs[a].head, static_cast<Pos>(a)});
  } else {
    if (!source) throw ParseError(last_line, "missing 'source'");
    if (!sink) throw ParseError(last_line, "missing 'sink'");
    out.net.vertex_count = static_cast<std::int32_t>(vertex_count);
    out.net.source = *source;
    out.net.sink = *sink;
    out.net.budgets = std::move(budgets);
    for (std::size_t a = 0; a < arcs.size(); ++a)
      out.net.arcs.push_back(
          InterdictionNetwork::Arc{arcs[a].tail, arcs[a].head, static_cast<Pos>(a)});
  }
  return out;
}

ParsedInstance parse_instance_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError(0, "cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_instance_text(buffer.str());
}

std::string format_key(double value) {
  char buf[64];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

std::string game_to_text(const MaxPayoffGame& game, std::span<const double> keys) {
  std::ostringstream out;
  out << "game " << game.node_count << ' ' << game.arcs.size() << '\n';
  for (Pos v = 0; v < game.node_count; ++v)
    out << "node " << v << ' '
        << (game.owners[static_cast<std::size_t>(v)] == MaxPayoffGame::Owner::Min ? "min"
                                                                                  : "max")
        << '\n';
  for (const auto& arc : game.arcs)
    out << "arc " << arc.tail << ' ' << arc.head << ' '
        << format_key(keys[static_cast<std::size_t>(arc.weight_pos)]) << '\n';
  out << "start " << game.start << '\n';
  return out.str();
}

std::string network_to_text(const InterdictionNetwork& net, std::span<const double> keys) {
  std::ostringstream out;
  out << "network " << net.vertex_count << ' ' << net.arcs.size() << '\n';
  for (Pos v = 0; v < net.vertex_count; ++v)
    if (net.budget_of(v) != 0) out << "budget " << v << ' ' << net.budget_of(v) << '\n';
  for (const auto& arc : net.arcs)
    out << "arc " << arc.tail << ' ' << arc.head << ' '
        << format_key(keys[static_cast<std::size_t>(arc.capacity_pos)]) << '\n';
  out << "source " << net.source << '\n';
  out << "sink " << net.sink << '\n';
  return out.str();
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "problem:     " << problem_kind << '\n';
  out << "algorithm:   " << algorithm << '\n';
  out << "outcome:     " << (value ? format_key(*value) : "disconnected") << '\n';
  if (answer_position) out << "position:    " << *answer_position << '\n';
  out << "comparisons: " << comparisons << '\n';
  out << "iterations:  " << iterations << '\n';
  out << "groups:      ";
  for (std::size_t i = 0; i < group_counts.size(); ++i)
    out << (i ? " " : "") << group_counts[i];
  out << '\n';
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", elapsed_ms);
  out << "elapsed_ms:  " << ms << '\n';
  if (removed_by_vertex) {
    out << "removed:    ";
    bool any = false;
    for (std::size_t v = 0; v < removed_by_vertex->size(); ++v)
      for (Pos a : (*removed_by_vertex)[v]) {
        out << " " << v << ":" << a;
        any = true;
      }
    if (!any) out << " (none)";
    out << '\n';
  }
  auto strategy_line = [&out](const char* name, const std::vector<Pos>& strategy) {
    out << name;
    for (std::size_t v = 0; v < strategy.size(); ++v)
      if (strategy[v] >= 0) out << ' ' << v << "->" << strategy[v];
    out << '\n';
  };
  if (max_strategy) strategy_line("max_strategy:", *max_strategy);
  if (min_strategy) strategy_line("min_strategy:", *min_strategy);
  return out.str();
}

std::string RunReport::to_json() const {
  nlohmann::json j;
  j["problem_kind"] = problem_kind;
  j["algorithm"] = algorithm;
  if (value)
    j["outcome"] = format_key(*value);
  else
    j["outcome"] = "disconnected";
  if (answer_position)
    j["answer_position"] = *answer_position;
  else
    j["answer_position"] = nullptr;
  j["comparisons"] = comparisons;
  j["iterations"] = iterations;
  j["group_counts"] = group_counts;
  j["elapsed_ms"] = elapsed_ms;
  if (removed_by_vertex) {
    nlohmann::json removed = nlohmann::json::array();
    for (std::size_t v = 0; v < removed_by_vertex->size(); ++v) {
      if ((*removed_by_vertex)[v].empty()) continue;
      removed.push_back({{"vertex", v}, {"arcs", (*removed_by_vertex)[v]}});
    }
    j["removed_arcs"] = removed;
  }
  if (max_strategy) j["max_strategy"] = *max_strategy;
  if (min_strategy) j["min_strategy"] = *min_strategy;
  return j.dump(2);
}

}  // namespace minmax
