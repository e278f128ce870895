#ifndef GRAPHINV_GRAPH_HPP
#define GRAPHINV_GRAPH_HPP

#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphinv/matrix.hpp"

namespace graphinv {

// Undirected simple graph. Vertices are 0-based inside the library; the file
// formats and CLI reports use 1-based labels.
class Graph {
 public:
  Graph() = default;

  // Edge endpoints are 1-based, matching the edge-list file format.
  // Rejects self-loops and out-of-range endpoints; duplicate pairs collapse.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  // Symmetric 0/1 matrix with zero diagonal.
  static Graph from_adjacency(const IntMatrix& a);

  static Graph from_graph6(std::string_view line);
  std::string to_graph6() const;

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const { return adj_matrix_(u, v) != 0; }

  // Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  const IntMatrix& adjacency() const { return adj_matrix_; }

  // Edges as sorted 0-based pairs (u < v), lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  // Induced subgraph on the given (sorted, 0-based) vertex set; vertex i of
  // the result corresponds to verts[i].
  Graph induced(const std::vector<int>& verts) const;

  // Image of this graph under the permutation perm (perm[v] = new label of v).
  Graph relabelled(const std::vector<int>& perm) const;

 private:
  int n_ = 0;
  int edge_count_ = 0;
  IntMatrix adj_matrix_;
  std::vector<std::vector<int>> adj_;

  void rebuild_adjacency_sets();
};

IntMatrix laplacian(const Graph& g);

struct DistanceTable {
  static constexpr int kUnreachable = std::numeric_limits<int>::max();
  IntMatrix d;

  bool reachable(int i, int j) const { return d(i, j) != kUnreachable; }
  // Maximum finite entry; 0 for the empty graph.
  int diameter() const;
};

// BFS from every vertex.
DistanceTable all_pairs_distances(const Graph& g);

// Connected components as sorted vertex blocks, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v" (1-based).
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

// One graph6 line per graph; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace graphinv

#endif
