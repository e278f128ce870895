#ifndef GRAPHINV_NM_HPP
#define GRAPHINV_NM_HPP

#include <vector>

#include "graphinv/graph.hpp"
#include "graphinv/matrix.hpp"

namespace graphinv {

// Neighbourhood matrix of a (threshold) graph. Diagonal entries are
// -degree(i); a positive entry on an edge (i,j) counts |N(j) \ N(i)|; a
// negative entry on a distance-2 non-edge counts -|N(i) intersect N(j)|.
struct NMMatrix {
  int n = 0;
  int level = 1;
  IntMatrix eta;

  std::string dump() const { return eta.dump(); }
};

struct NMSequence {
  std::vector<NMMatrix> matrices;  // NM^{1} .. NM^{k}
  int k = 0;
  int n = 0;
  int nonzero_count_final = 0;  // z, for NM^{k}
};

// Entry-by-entry construction from the neighborhood sets.
NMMatrix nm_direct(const Graph& g, int level = 1);

// The same matrix as the product A(G) x L(G), exact integer arithmetic.
NMMatrix nm_product(const Graph& g, int level = 1);

// Iterate the threshold-graph construction until the matrix has no zero
// entries or the nonzero count stabilizes. Always yields k >= 1; the
// stabilization probe matrix is computed and discarded.
NMSequence power_sequence(const Graph& g);

// Columns of row i with strictly positive entries (i never included).
std::vector<int> neighbour_set(const NMMatrix& m, int i);

// Off-diagonal negative columns of row i.
std::vector<int> x_set(const NMMatrix& m, int i);

// Graph on the same vertices whose edges are the nonzero off-diagonal
// positions of m.
Graph threshold_graph(const NMMatrix& m);

}  // namespace graphinv

#endif
