#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

namespace dsg::game {

struct Edge {
  int to = 0;
  long long weight = 0;
};

// Finite turn-based arena. Successor lists are sorted ascending by target id,
// which fixes every least-index scan downstream. max_abs_weight is computed
// from the edges, never declared.
struct Game {
  int n = 0;
  std::vector<int> owner;  // 1 or 2 per vertex
  std::vector<std::vector<Edge>> succ;
  long long max_abs_weight = 0;
  long edge_count = 0;
};

// Builds a validated game from an edge list (u, v, w); sorts successors.
Game make_game(int n, std::vector<int> owner,
               const std::vector<std::tuple<int, int, long long>>& edges);

// Checks every structural invariant; throws the matching input error.
void validate_game(const Game& g);

// Successor choice per owned vertex, -1 elsewhere.
struct PositionalStrategy {
  int player = 1;
  std::vector<int> choice;
  bool operator==(const PositionalStrategy&) const = default;
};

// Least-index successor at every vertex of the player.
PositionalStrategy least_index_strategy(const Game& g, int player);
// Greatest-index successor at every vertex of the player.
PositionalStrategy greatest_index_strategy(const Game& g, int player);
// Middle successor (index count/2) at every vertex of the player.
PositionalStrategy middle_index_strategy(const Game& g, int player);

// Strategy must choose an existing successor at every owned vertex.
void validate_strategy(const Game& g, const PositionalStrategy& s);

// The edge chosen at v by the profile (owner decides which strategy applies).
const Edge& chosen_edge(const Game& g, const PositionalStrategy& sigma,
                        const PositionalStrategy& tau, int v);

// Text format: `game <n>` first, then `vertex <id> <1|2>` and
// `edge <u> <v> <w>` lines in any order; `#` starts a comment.
Game parse_game(std::istream& in);
Game parse_game_text(const std::string& text);
std::string serialize_game(const Game& g);

}  // namespace dsg::game
