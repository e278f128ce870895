#ifndef GRAPHINV_TESTUTIL_HPP
#define GRAPHINV_TESTUTIL_HPP

#include <numeric>
#include <random>
#include <vector>

#include "graphinv/graph.hpp"

namespace graphinv::testutil {

inline Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return Graph::from_edge_list(n, edges);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

inline Graph empty_graph(int n) { return Graph::from_edge_list(n, {}); }

// Star with the center labelled 1.
inline Graph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
  return Graph::from_edge_list(leaves + 1, edges);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : a.edges()) edges.emplace_back(u + 1, v + 1);
  for (const auto& [u, v] : b.edges()) edges.emplace_back(na + u + 1, na + v + 1);
  return Graph::from_edge_list(na + b.vertex_count(), edges);
}

// The 8-vertex, 14-edge example graph used throughout the test suite.
inline Graph golden8() {
  return Graph::from_edge_list(8, {{1, 2}, {1, 6}, {2, 6}, {2, 7}, {2, 8}, {3, 4}, {3, 5},
                                   {3, 7}, {4, 7}, {4, 8}, {5, 8}, {4, 6}, {6, 7}, {6, 8}});
}

// Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
// {+-(1,0), +-(0,1), +-(1,1)}. SRG(16, 6, 2, 2), clique number 3.
inline Graph shrikhande() {
  std::vector<std::pair<int, int>> edges;
  auto id = [](int x, int y) { return ((x & 3) * 4 + (y & 3)) + 1; };
  const int dx[] = {1, 3, 0, 0, 1, 3};
  const int dy[] = {0, 0, 1, 3, 1, 3};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int d = 0; d < 6; ++d) {
        const int u = id(x, y), v = id(x + dx[d], y + dy[d]);
        if (u < v) edges.emplace_back(u, v);
      }
  return Graph::from_edge_list(16, edges);
}

// 4x4 rook graph: same SRG parameters, clique number 4.
inline Graph rook4() {
  std::vector<std::pair<int, int>> edges;
  auto id = [](int r, int c) { return r * 4 + c + 1; };
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      for (int c2 = c + 1; c2 < 4; ++c2) edges.emplace_back(id(r, c), id(r, c2));
      for (int r2 = r + 1; r2 < 4; ++r2) edges.emplace_back(id(r, c), id(r2, c));
    }
  return Graph::from_edge_list(16, edges);
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace graphinv::testutil

#endif
