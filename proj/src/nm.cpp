#include "graphinv/nm.hpp"

#include <algorithm>

namespace graphinv {

NMMatrix nm_direct(const Graph& g, int level) {
  const int n = g.vertex_count();
  NMMatrix m{n, level, IntMatrix(n, n)};
  for (int i = 0; i < n; ++i) {
    const auto& ni = g.neighbors(i);
    m.eta(i, i) = -g.degree(i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto& nj = g.neighbors(j);
      if (g.has_edge(i, j)) {
        // |N(j) \ N(i)|
        int count = 0;
        for (int v : nj)
          if (!g.has_edge(i, v)) ++count;  // i itself is in N(j) and never in N(i)
        m.eta(i, j) = count;
      } else {
        int common = 0;
        for (int v : nj)
          if (g.has_edge(i, v)) ++common;
        m.eta(i, j) = -common;
      }
    }
  }
  return m;
}

NMMatrix nm_product(const Graph& g, int level) {
  NMMatrix m{g.vertex_count(), level, g.adjacency() * laplacian(g)};
  return m;
}

Graph threshold_graph(const NMMatrix& m) {
  IntMatrix a(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j && m.eta(i, j) != 0) a(i, j) = 1;
  return Graph::from_adjacency(a);
}

NMSequence power_sequence(const Graph& g) {
  NMSequence seq;
  seq.n = g.vertex_count();
  const int total = seq.n * seq.n;
  Graph current = g;
  int z = -1;  // sentinel: the first level is always kept
  for (int l = 1;; ++l) {
    NMMatrix m = nm_product(current, l);
    const int u = m.eta.nonzero_count();
    if (u == total) {
      seq.matrices.push_back(std::move(m));
      seq.k = l;
      seq.nonzero_count_final = u;
      break;
    }
    if (u == z) {
      // Stabilized: the current matrix is the probe and is discarded.
      seq.k = l - 1;
      seq.nonzero_count_final = z;
      break;
    }
    z = u;
    current = threshold_graph(m);
    seq.matrices.push_back(std::move(m));
  }
  return seq;
}

std::vector<int> neighbour_set(const NMMatrix& m, int i) {
  std::vector<int> out;
  for (int j = 0; j < m.n; ++j)
    if (j != i && m.eta(i, j) > 0) out.push_back(j);
  return out;
}

std::vector<int> x_set(const NMMatrix& m, int i) {
  std::vector<int> out;
  for (int j = 0; j < m.n; ++j)
    if (j != i && m.eta(i, j) < 0) out.push_back(j);
  return out;
}

}  // namespace graphinv
