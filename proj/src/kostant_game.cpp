#include "kostant/kostant_game.hpp"

#include <numeric>
#include <unordered_map>

namespace kostant {

Game modified_game(CartanData d, int vertex, int arrows) {
  return Game{std::move(d), Marking{vertex, arrows}};
}

namespace {

// Sum over neighbors of n_{i,j} c_j, plus the extra chip's k at the marked
// vertex.  Status compares 2 c_i against this, avoiding halves.
int neighbor_sum(const Game& g, const IntVec& chips, int i) {
  int s = 0;
  for (int j : g.diagram.neighbors[i]) s += g.diagram.arrows(i, j) * chips[j];
  if (g.marking && g.marking->vertex == i) s += g.marking->arrows;
  return s;
}

}  // namespace

VertexStatus status(const Game& g, const IntVec& chips, int i) {
  int lhs = 2 * chips[i];
  int rhs = neighbor_sum(g, chips, i);
  if (lhs == rhs) return VertexStatus::Happy;
  return lhs < rhs ? VertexStatus::Unhappy : VertexStatus::Excited;
}

bool has_unhappy(const Game& g, const IntVec& chips) {
  for (int i = 0; i < g.diagram.n; ++i)
    if (status(g, chips, i) == VertexStatus::Unhappy) return true;
  return false;
}

IntVec fire(const Game& g, IntVec chips, int i) {
  if (status(g, chips, i) != VertexStatus::Unhappy)
    throw std::invalid_argument("fire: vertex " + std::to_string(i + 1) + " is not unhappy");
  chips[i] = -chips[i] + neighbor_sum(g, chips, i);
  return chips;
}

int game_height(const Game& g, const IntVec& chips) {
  return height(chips) + (g.marking ? 1 : 0);
}

PlayResult play(const Game& g, IntVec start) {
  PlayResult r;
  r.terminal = std::move(start);
  for (;;) {
    int pick = -1;
    for (int i = 0; i < g.diagram.n && pick < 0; ++i)
      if (status(g, r.terminal, i) == VertexStatus::Unhappy) pick = i;
    if (pick < 0) break;
    r.terminal = fire(g, r.terminal, pick);
    r.moves.push_back(pick);
  }
  return r;
}

PlayResult play_sequence(const Game& g, IntVec start, const std::vector<int>& moves) {
  PlayResult r;
  r.terminal = std::move(start);
  for (std::size_t k = 0; k < moves.size(); ++k) {
    int i = moves[k];
    if (i < 0 || i >= g.diagram.n)
      throw IllegalMove(static_cast<int>(k), "move names an invalid vertex");
    if (status(g, r.terminal, i) != VertexStatus::Unhappy)
      throw IllegalMove(static_cast<int>(k),
                        "vertex " + std::to_string(i + 1) + " is not unhappy at step " +
                            std::to_string(k));
    r.terminal = fire(g, r.terminal, i);
    r.moves.push_back(i);
  }
  return r;
}

GameGraph game_graph(const Game& g, IntVec start) {
  GameGraph gg;
  std::unordered_map<IntVec, int, IntVecHash> index;
  gg.nodes.push_back(std::move(start));
  index.emplace(gg.nodes[0], 0);
  for (int at = 0; at < static_cast<int>(gg.nodes.size()); ++at) {
    bool terminal = true;
    for (int i = 0; i < g.diagram.n; ++i) {
      if (status(g, gg.nodes[at], i) != VertexStatus::Unhappy) continue;
      terminal = false;
      IntVec next = fire(g, gg.nodes[at], i);
      auto [it, inserted] = index.emplace(next, static_cast<int>(gg.nodes.size()));
      if (inserted) gg.nodes.push_back(std::move(next));
      gg.edges.push_back({at, i, it->second});
    }
    if (terminal) gg.terminals.push_back(at);
  }
  return gg;
}

std::vector<int> heights(const CartanData& d) {
  CartanData co = dual(d);
  std::vector<int> h(d.n);
  for (int j = 0; j < d.n; ++j) {
    Game g = modified_game(co, j, 1);
    h[j] = height(play(g, IntVec(d.n, 0)).terminal);
  }
  return h;
}

bool k_arrow_height_check(const CartanData& d, int j, int k) {
  Game one = modified_game(d, j, 1);
  Game many = modified_game(d, j, k);
  int h = height(play(one, IntVec(d.n, 0)).terminal);
  int hk = height(play(many, IntVec(d.n, 0)).terminal);
  return hk + 1 == k * h + 1;
}

}  // namespace kostant
