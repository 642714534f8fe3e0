#include "dsg/game.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>

#include "dsg/errors.hpp"

namespace dsg::game {

namespace {

long long abs_ll(long long v) { return v < 0 ? -v : v; }

void check_owner(int n, const std::vector<int>& owner) {
  if (n < 1) throw ParseError("game needs at least one vertex");
  if (owner.size() != static_cast<std::size_t>(n)) {
    throw ParseError("owner list size does not match vertex count");
  }
  for (int v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] != 1 &&
        owner[static_cast<std::size_t>(v)] != 2) {
      throw ParseError("vertex " + std::to_string(v) + " owner must be 1 or 2");
    }
  }
}

}  // namespace

Game make_game(int n, std::vector<int> owner,
               const std::vector<std::tuple<int, int, long long>>& edges) {
  check_owner(n, owner);
  Game g;
  g.n = n;
  g.owner = std::move(owner);
  g.succ.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v, w] : edges) {
    if (u < 0 || u >= n) throw DanglingVertexId(u);
    if (v < 0 || v >= n) throw DanglingVertexId(v);
    g.succ[static_cast<std::size_t>(u)].push_back(Edge{v, w});
  }
  for (int u = 0; u < n; ++u) {
    auto& list = g.succ[static_cast<std::size_t>(u)];
    std::sort(list.begin(), list.end(),
              [](const Edge& a, const Edge& b) { return a.to < b.to; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i - 1].to == list[i].to) throw DuplicateEdge(u, list[i].to);
    }
    if (list.empty()) throw EmptySuccessorSet(u);
    g.edge_count += static_cast<long>(list.size());
    for (const Edge& e : list) {
      g.max_abs_weight = std::max(g.max_abs_weight, abs_ll(e.weight));
    }
  }
  return g;
}

void validate_game(const Game& g) {
  check_owner(g.n, g.owner);
  if (g.succ.size() != static_cast<std::size_t>(g.n)) {
    throw ParseError("successor table size does not match vertex count");
  }
  long long w = 0;
  long m = 0;
  for (int u = 0; u < g.n; ++u) {
    const auto& list = g.succ[static_cast<std::size_t>(u)];
    if (list.empty()) throw EmptySuccessorSet(u);
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].to < 0 || list[i].to >= g.n) throw DanglingVertexId(list[i].to);
      if (i > 0 && list[i - 1].to >= list[i].to) {
        if (list[i - 1].to == list[i].to) throw DuplicateEdge(u, list[i].to);
        throw ParseError("successor list of vertex " + std::to_string(u) +
                         " is not sorted");
      }
      w = std::max(w, abs_ll(list[i].weight));
    }
    m += static_cast<long>(list.size());
  }
  if (w != g.max_abs_weight || m != g.edge_count) {
    throw ParseError("cached weight bound or edge count is stale");
  }
}

namespace {

PositionalStrategy pick_by_rule(const Game& g, int player,
                                std::size_t (*pick)(std::size_t)) {
  PositionalStrategy s;
  s.player = player;
  s.choice.assign(static_cast<std::size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v) {
    if (g.owner[static_cast<std::size_t>(v)] != player) continue;
    const auto& list = g.succ[static_cast<std::size_t>(v)];
    s.choice[static_cast<std::size_t>(v)] = list[pick(list.size())].to;
  }
  return s;
}

}  // namespace

PositionalStrategy least_index_strategy(const Game& g, int player) {
  return pick_by_rule(g, player, [](std::size_t) -> std::size_t { return 0; });
}

PositionalStrategy greatest_index_strategy(const Game& g, int player) {
  return pick_by_rule(g, player,
                      [](std::size_t len) -> std::size_t { return len - 1; });
}

PositionalStrategy middle_index_strategy(const Game& g, int player) {
  return pick_by_rule(g, player,
                      [](std::size_t len) -> std::size_t { return len / 2; });
}

void validate_strategy(const Game& g, const PositionalStrategy& s) {
  if (s.player != 1 && s.player != 2) {
    throw PreconditionViolated("strategy player must be 1 or 2");
  }
  if (s.choice.size() != static_cast<std::size_t>(g.n)) {
    throw PreconditionViolated("strategy size does not match vertex count");
  }
  for (int v = 0; v < g.n; ++v) {
    int c = s.choice[static_cast<std::size_t>(v)];
    if (g.owner[static_cast<std::size_t>(v)] != s.player) continue;
    const auto& list = g.succ[static_cast<std::size_t>(v)];
    bool found = std::any_of(list.begin(), list.end(),
                             [c](const Edge& e) { return e.to == c; });
    if (!found) {
      throw PreconditionViolated("strategy picks a missing edge at vertex " +
                                 std::to_string(v));
    }
  }
}

const Edge& chosen_edge(const Game& g, const PositionalStrategy& sigma,
                        const PositionalStrategy& tau, int v) {
  const PositionalStrategy& s =
      g.owner[static_cast<std::size_t>(v)] == 1 ? sigma : tau;
  int c = s.choice[static_cast<std::size_t>(v)];
  const auto& list = g.succ[static_cast<std::size_t>(v)];
  auto it = std::lower_bound(
      list.begin(), list.end(), c,
      [](const Edge& e, int target) { return e.to < target; });
  if (it == list.end() || it->to != c) {
    throw PreconditionViolated("strategy picks a missing edge at vertex " +
                               std::to_string(v));
  }
  return *it;
}

namespace {

struct RawLines {
  long game_line = 0;
  long long n = -1;
  // (line, id, owner) and (line, u, v, w) as parsed, validated after reading.
  std::vector<std::tuple<long, long long, long long>> vertices;
  std::vector<std::tuple<long, long long, long long, long long>> edges;
};

long long parse_ll(const std::string& tok, long line, const char* what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
  if (pos != tok.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
  return v;
}

}  // namespace

Game parse_game(std::istream& in) {
  RawLines raw;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (kw == "game") {
      if (raw.game_line != 0) throw ParseError(lineno, "duplicate game line");
      if (toks.size() != 1) throw ParseError(lineno, "expected 'game <n>'");
      raw.game_line = lineno;
      raw.n = parse_ll(toks[0], lineno, "vertex count");
      if (raw.n < 1) throw ParseError(lineno, "vertex count must be positive");
    } else if (kw == "vertex") {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'vertex <id> <1|2>'");
      raw.vertices.emplace_back(lineno, parse_ll(toks[0], lineno, "vertex id"),
                                parse_ll(toks[1], lineno, "owner"));
    } else if (kw == "edge") {
      if (toks.size() != 3) throw ParseError(lineno, "expected 'edge <u> <v> <w>'");
      raw.edges.emplace_back(lineno, parse_ll(toks[0], lineno, "vertex id"),
                             parse_ll(toks[1], lineno, "vertex id"),
                             parse_ll(toks[2], lineno, "weight"));
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (raw.game_line == 0) throw ParseError("missing 'game <n>' line");
  if (raw.n > 1000000) throw ParseError("vertex count too large");
  int n = static_cast<int>(raw.n);
  std::vector<int> owner(static_cast<std::size_t>(n), 0);
  for (const auto& [ln, id, ow] : raw.vertices) {
    if (id < 0 || id >= raw.n) throw DanglingVertexId(id);
    if (ow != 1 && ow != 2) throw ParseError(ln, "owner must be 1 or 2");
    if (owner[static_cast<std::size_t>(id)] != 0) {
      throw ParseError(ln, "duplicate vertex line for id " + std::to_string(id));
    }
    owner[static_cast<std::size_t>(id)] = static_cast<int>(ow);
  }
  for (int v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] == 0) {
      throw ParseError("missing vertex line for id " + std::to_string(v));
    }
  }
  std::vector<std::tuple<int, int, long long>> edges;
  edges.reserve(raw.edges.size());
  for (const auto& [ln, u, v, w] : raw.edges) {
    if (u < 0 || u >= raw.n) throw DanglingVertexId(u);
    if (v < 0 || v >= raw.n) throw DanglingVertexId(v);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v), w);
  }
  return make_game(n, std::move(owner), edges);
}

Game parse_game_text(const std::string& text) {
  std::istringstream in(text);
  return parse_game(in);
}

std::string serialize_game(const Game& g) {
  std::ostringstream out;
  out << "game " << g.n << "\n";
  for (int v = 0; v < g.n; ++v) {
    out << "vertex " << v << " " << g.owner[static_cast<std::size_t>(v)] << "\n";
  }
  for (int u = 0; u < g.n; ++u) {
    for (const Edge& e : g.succ[static_cast<std::size_t>(u)]) {
      out << "edge " << u << " " << e.to << " " << e.weight << "\n";
    }
  }
  return out.str();
}

}  // namespace dsg::game
