#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "kostant/root_system.hpp"

// The Kostant game and the modified Kostant game (marked vertex with k
// arrows from the implicit, always-happy extra vertex).  The extra vertex is
// never stored: its single chip contributes a constant k to the marked
// vertex's neighbor sum.

namespace kostant {

enum class VertexStatus { Happy, Unhappy, Excited };

struct Marking {
  int vertex = 0;
  int arrows = 1;
};

struct Game {
  CartanData diagram;
  std::optional<Marking> marking;  // present iff the game is modified
};

// Modified game on the given diagram, started from the empty configuration.
Game modified_game(CartanData d, int vertex, int arrows = 1);

struct IllegalMove : std::runtime_error {
  int step;  // 0-based index into the offending move sequence
  IllegalMove(int step_, const std::string& what) : std::runtime_error(what), step(step_) {}
};

VertexStatus status(const Game& g, const IntVec& chips, int i);

bool has_unhappy(const Game& g, const IntVec& chips);

// Fires vertex i; rejects non-Unhappy vertices.
IntVec fire(const Game& g, IntVec chips, int i);

// Total chips, counting the implicit extra chip of a modified game.
int game_height(const Game& g, const IntVec& chips);

struct PlayResult {
  IntVec terminal;
  std::vector<int> moves;
};

// Fires the lowest-index Unhappy vertex until none remains.
PlayResult play(const Game& g, IntVec start);

// Plays the given fired-vertex sequence (not necessarily to a terminal).
// A move naming a non-Unhappy vertex throws IllegalMove with its step index.
PlayResult play_sequence(const Game& g, IntVec start, const std::vector<int>& moves);

struct GameGraph {
  std::vector<IntVec> nodes;  // nodes[0] is the initial configuration
  struct Edge {
    int from;
    int fired;
    int to;
  };
  std::vector<Edge> edges;
  std::vector<int> terminals;  // node indices with no Unhappy vertex
};

// BFS over all legal fire sequences, deduplicating configurations.
GameGraph game_graph(const Game& g, IntVec start);

// h_j for every vertex: h_j + 1 is the height (with the extra chip) of the
// terminal configuration of the modified game on the coroot diagram at j.
std::vector<int> heights(const CartanData& d);

// Terminal height of the k-arrow game equals k*h + 1, with h from the
// 1-arrow game at the same vertex.
bool k_arrow_height_check(const CartanData& d, int j, int k);

}  // namespace kostant
